import doctest
from itertools import combinations, permutations

import numpy as np
import pytest
from hypothesis import given, strategies as st

import schubmax.perm as perm_mod
from schubmax.perm import (
    Composition, Permutation, apply_transposition, complement, compositions,
    count_132, descents, direct_sum, format_composition, identity, inverse,
    is_dominant, is_layered, kronecker, layered, layers_of, length,
    parse_composition, permutation_matrix, reduced_words, reverse, shifted,
    w0, word_to_permutation,
)

P = Permutation.parse


def bubble_swaps(w):
    """Independent length oracle: adjacent swaps bubble sort performs."""
    w, swaps = list(w), 0
    for end in range(len(w) - 1, 0, -1):
        for i in range(end):
            if w[i] > w[i + 1]:
                w[i], w[i + 1] = w[i + 1], w[i]
                swaps += 1
    return swaps


perms = st.integers(min_value=0, max_value=8).flatmap(
    lambda n: st.permutations(list(range(1, n + 1)))
).map(Permutation)

comps = st.lists(st.integers(min_value=1, max_value=5), min_size=1, max_size=5).map(Composition)


def test_doctests():
    assert doctest.testmod(perm_mod).failed == 0


def test_parse_and_format():
    assert P("15243") == (1, 5, 2, 4, 3)
    assert str(P("15243")) == "15243"
    w = P("1,4,3,2,12,11,10,9,8,7,6,5")
    assert str(w) == "1,4,3,2,12,11,10,9,8,7,6,5"
    assert P("") == ()
    with pytest.raises(ValueError):
        P("1224")
    with pytest.raises(ValueError):
        P("12a")
    with pytest.raises(ValueError):
        Permutation((0, 1))


def test_composition_roundtrip():
    c = parse_composition("(1, 3, 8)")
    assert c == (1, 3, 8) and c.total == 12
    assert format_composition(c) == "(1, 3, 8)" == str(c)
    with pytest.raises(ValueError):
        Composition((1, 0))


@pytest.mark.parametrize("w, expected", [
    (identity(4), 0),
    (w0(4), 6),
    (P("15243"), 4),
])
def test_length(w, expected):
    assert length(w) == expected == bubble_swaps(w)


def test_length_of_w0():
    for n in range(8):
        assert length(w0(n)) == n * (n - 1) // 2


@pytest.mark.parametrize("w, expected", [
    (identity(3), set()),
    (P("321"), {1, 2}),
    (P("132"), {2}),
])
def test_descents(w, expected):
    assert descents(w) == expected


def test_apply_transposition():
    assert apply_transposition(identity(3), 2) == P("132")
    assert apply_transposition(P("132"), 2) == identity(3)
    assert apply_transposition(P("321"), 1) == P("231")
    with pytest.raises(ValueError):
        apply_transposition(P("321"), 3)
    with pytest.raises(ValueError):
        apply_transposition(P("321"), 0)


def test_direct_sum_and_shift():
    assert direct_sum(P("21"), P("21")) == P("2143")
    assert direct_sum(P("1"), P("21")) == P("132")
    assert direct_sum(P("132"), P("21")) == P("13254")
    assert shifted(0, P("321")) == P("321")
    assert shifted(2, P("21")) == P("1243")
    assert shifted(1, P("321")) == P("1432")


def test_layered():
    assert layered((3,)) == P("321")
    assert layered((1, 2)) == P("132")
    assert layered((1, 3, 8)) == P("1,4,3,2,12,11,10,9,8,7,6,5")
    assert layered(()) == identity(0)


def test_kronecker_examples():
    assert kronecker(P("21"), 2) == P("3412")
    assert kronecker(P("132"), 2) == P("125634")
    with pytest.raises(ValueError):
        kronecker(P("21"), 0)


@given(perms, st.integers(min_value=1, max_value=3))
def test_kronecker_matrix(w, c):
    kron = np.kron(np.array(permutation_matrix(w), dtype=int).reshape(len(w), len(w)), np.eye(c, dtype=int))
    assert (np.array(permutation_matrix(kronecker(w, c))).reshape(kron.shape) == kron).all()
    assert length(kronecker(w, c)) == c * c * length(w)


@given(perms)
def test_kronecker_identity_factor(w):
    assert kronecker(w, 1) == w


def brute_132(w):
    return sum(1 for i, j, k in combinations(range(len(w)), 3) if w[i] < w[k] < w[j])


def test_pattern_examples():
    assert is_dominant(P("321")) and count_132(P("321")) == 0
    assert not is_dominant(P("132")) and count_132(P("132")) == 1
    assert count_132(P("1423")) == 2


@given(perms)
def test_count_132_matches_brute_force(w):
    assert count_132(w) == brute_132(w)
    assert is_dominant(w) == (count_132(w) == 0)


def test_reduced_words_examples():
    assert reduced_words(identity(4)) == {()}
    assert reduced_words(P("132")) == {(2,)}
    assert reduced_words(P("321")) == {(1, 2, 1), (2, 1, 2)}
    with pytest.raises(ValueError):
        reduced_words(w0(6))


def test_reduced_words_evaluate_back():
    for p in permutations(range(1, 5)):
        w = Permutation(p)
        for word in reduced_words(w):
            assert len(word) == length(w)
            assert word_to_permutation(word, 4) == w


@given(perms)
def test_transposition_at_descent_drops_length(w):
    for a in descents(w):
        assert length(apply_transposition(w, a)) == length(w) - 1
    for a in set(range(1, len(w))) - descents(w):
        assert length(apply_transposition(w, a)) == length(w) + 1


@given(perms, perms)
def test_direct_sum_length_adds(u, v):
    assert length(direct_sum(u, v)) == length(u) + length(v)


@given(comps)
def test_layered_factorization(b):
    w = layered(b)
    assert len(w) == b.total
    if len(b) >= 2:
        assert w == direct_sum(layered(b[:-1]), w0(b[-1]))
    assert layers_of(w) == b
    assert is_layered(w)


def test_layers_of_rejects_non_layered():
    assert layers_of(P("2413")) is None
    assert layers_of(P("312")) is None
    assert layers_of(P("132")) == (1, 2)


def test_compositions_count():
    for n in range(1, 10):
        cs = list(compositions(n))
        assert len(cs) == 2 ** (n - 1) == len(set(cs))
        assert all(c.total == n for c in cs)


@given(perms)
def test_involutions(w):
    assert inverse(inverse(w)) == w
    assert reverse(reverse(w)) == w
    assert complement(complement(w)) == w
    assert complement(w) == inverse(reverse(inverse(w)))
