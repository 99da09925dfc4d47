import pytest
from hypothesis import given, settings, strategies as st

from schubmax.layered import (
    AppendixRow, DpTable, build, composition_of, diff_against_appendix,
    format_f6, format_fixed, load_appendix, upsilon_layered,
)
from schubmax.perm import Composition, compositions, layered
from schubmax.proctor import F
from schubmax.upsilon import sweep, upsilon


@pytest.fixture(scope="module")
def table():
    return build(60)


comps = st.lists(st.integers(1, 3), min_size=1, max_size=4).map(Composition)


@settings(deadline=None)
@given(comps)
def test_upsilon_layered_matches_engine(c):
    assert upsilon_layered(c) == upsilon(layered(c))


def test_dp_is_max_over_all_compositions(table):
    for n in range(1, 13):
        best = max(upsilon_layered(c) for c in compositions(n))
        assert table.v[n] == best
        assert upsilon_layered(table.composition(n)) == best


def test_dp_tie_break_prefers_smallest_last_layer(table):
    # both last-layer sizes tie at n = 2 and n = 5
    assert F(1, 1) * table.v[1] == F(0, 2) * table.v[0]
    assert table.composition(2) == (1, 1)
    assert table.composition(5) == (1, 1, 3)
    for n in range(1, 40):
        p = table.argmax_p[n]
        assert all(table.v[n - q] * F(n - q, q) < table.v[n] for q in range(1, p))


def test_dp_matches_sweep(table):
    for n in range(1, 9):
        assert table.v[n] == sweep(n).u


def test_composition_backtrace(table):
    assert table.composition(12) == (1, 3, 8)
    assert composition_of(0, table) == ()
    assert table.composition(60).total == 60
    with pytest.raises(ValueError):
        composition_of(61, table)


def test_rows_and_ratio(table):
    rows = table.rows()
    assert rows[0] == (1, (1,), "0.000000")
    assert rows[3] == (4, (1, 3), "0.145121")
    assert float(table.f_ratio(3)) == pytest.approx(1 / 9)


@pytest.mark.parametrize("x, digits, text", [
    (0.1234565, 6, "0.123456"),  # binary float just below the half
    ("0.1234565", 6, "0.123456"),  # exact half rounds to even
    ("0.1234575", 6, "0.123458"),
    ("-1.5", 0, "-2"),
    ("2.5", 0, "2"),
    (0, 3, "0.000"),
])
def test_format_fixed(x, digits, text):
    assert format_fixed(x, digits) == text


def test_format_f6_pads():
    assert format_f6(0.25) == "0.250000"


def test_build_rejects_zero():
    with pytest.raises(ValueError):
        build(0)


def test_load_appendix_shape():
    rows = load_appendix()
    assert len(rows) == 300
    assert [r.n for r in rows] == list(range(1, 301))
    assert rows[11] == AppendixRow(12, Composition((1, 3, 8)), "0.229879")
    assert all(r.composition.total == r.n for r in rows)


def test_diff_prefix(table):
    assert diff_against_appendix(table) == []


def test_diff_reports_mismatches(table):
    rows = [AppendixRow(4, Composition((2, 2)), "0.145121"), AppendixRow(5, Composition((1, 1, 3)), "0.999999")]
    kinds = [(d.n, d.kind) for d in diff_against_appendix(table, rows)]
    assert kinds == [(4, "composition"), (5, "f6")]


def test_diff_last_digit_is_truncation(table):
    # f(4) = 0.1451205..., printed truncated as 0.145120
    rows = [AppendixRow(4, Composition((1, 3)), "0.145120")]
    assert [(d.kind, d.ours) for d in diff_against_appendix(table, rows)] == [("last-digit", "0.145121")]
