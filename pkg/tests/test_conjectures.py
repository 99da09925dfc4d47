import json

import numpy as np
import pytest

from schubmax.conjectures import (
    TABULATED_U_PRIME, check_cauchy, check_kron, check_merzon_smirnov,
    check_weigandt, count_132_array, u_prime_table,
)
from schubmax.perm import Permutation, count_132
from schubmax.upsilon import sweep


def test_merzon_smirnov_small():
    rep = check_merzon_smirnov(7)
    assert rep.ok and rep.range_checked == (1, 7)
    assert {w["n"] for w in rep.witnesses} == set(range(1, 8))


def test_cauchy_small():
    rep = check_cauchy(7)
    assert rep.ok
    assert rep.details["sums"] == {k: 2 ** (k * (k - 1) // 2) for k in range(1, 8)}


def test_u_prime_small():
    rep = u_prime_table(7)
    assert rep.ok
    by_n = {r["n"]: r for r in rep.witnesses}
    for k in range(3, 8):
        assert by_n[k]["u_prime"] == TABULATED_U_PRIME[k][0]
        assert by_n[k]["witness"] == TABULATED_U_PRIME[k][1]
    assert by_n[2]["u_prime"] == 1


def test_kron_small():
    rep = check_kron(3)
    assert rep.ok and rep.details["conventions_agree"]


def test_weigandt_small():
    rep = check_weigandt(6)
    assert rep.ok
    assert rep.details["counts"][4]["dominant"] == 14  # Catalan


def test_count_132_array():
    sw = sweep(5)
    arr = count_132_array(sw.perms)
    assert list(arr) == [count_132(Permutation(int(x) for x in row)) for row in sw.perms]


def test_large_guard():
    with pytest.raises(ValueError):
        check_cauchy(9)
    with pytest.raises(ValueError):
        check_weigandt(9, allow_large=True)
    with pytest.raises(ValueError):
        u_prime_table(1)
    with pytest.raises(ValueError):
        check_kron(6)


def test_report_json():
    rep = check_weigandt(3)
    data = json.loads(rep.to_json())
    assert data["name"] == "weigandt" and data["range"] == [1, 3] and data["status"] == "holds"
