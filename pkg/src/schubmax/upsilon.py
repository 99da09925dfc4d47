"""
Principal specializations ``Y_w = S_w(1, ..., 1)`` of Schubert polynomials.

Macdonald's reduced-word formula sums ``a_1 ... a_l`` over the reduced
words of ``w`` and divides by ``l!``. Grouping the words by their last
letter gives the recursion used here::

    l(w) * Y_w = sum over right descents a of  a * Y_{w s_a},    Y_id = 1

``upsilon`` runs it with a memo over the weak order below ``w``;
``sweep`` runs it level by level over all of ``S_n`` with numpy, indexing
permutations by lexicographic rank.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterator, Sequence

import numpy as np

from .perm import (
    Permutation,
    length,
    REDUCED_WORD_MAX_LENGTH,
)

__all__ = [
    "upsilon", "upsilon_oracle", "sweep", "GroupSweep",
    "lehmer_code", "perm_rank", "DEFAULT_SWEEP_MAX_N",
]

DEFAULT_SWEEP_MAX_N = 10
# int64 headroom: u(n) * n^2 stays far below 2^63 up to here
_SWEEP_HARD_MAX_N = 11


def upsilon(w: Sequence[int], memo: dict | None = None) -> int:
    """Exact ``Y_w`` via the descent recursion.

    ``memo`` maps one-line tuples to values and may be shared across calls
    on permutations of the same size.
    """
    if memo is None:
        memo = {}
    root = tuple(w)
    if root in memo:
        return memo[root]
    # explicit stack: the recursion depth is l(w), which can exceed Python's limit
    stack = [root]
    while stack:
        u = stack[-1]
        if u in memo:
            stack.pop()
            continue
        des = [a for a in range(1, len(u)) if u[a - 1] > u[a]]
        if not des:
            memo[u] = 1
            stack.pop()
            continue
        children = []
        pending = False
        for a in des:
            v = list(u)
            v[a - 1], v[a] = v[a], v[a - 1]
            v = tuple(v)
            children.append((a, v))
            if v not in memo:
                stack.append(v)
                pending = True
        if pending:
            continue
        ell = length(u)
        total = sum(a * memo[v] for a, v in children)
        q, r = divmod(total, ell)
        if r:
            raise ArithmeticError(f"descent recursion not divisible at {u}")
        memo[u] = q
        stack.pop()
    return memo[root]


def upsilon_oracle(w: Sequence[int], max_length: int = REDUCED_WORD_MAX_LENGTH) -> int:
    """Brute force: ``(1/l!) * sum of a_1...a_l`` over all reduced words.

    Walks every reduced word explicitly (no memo), carrying the letter product.
    """
    ell = length(w)
    if ell > max_length:
        raise ValueError(f"length {ell} exceeds reduced-word guard {max_length}")
    total = 0
    stack = [(list(w), 1)]
    while stack:
        u, prod = stack.pop()
        leaf = True
        for a in range(1, len(u)):
            if u[a - 1] > u[a]:
                leaf = False
                v = u.copy()
                v[a - 1], v[a] = v[a], v[a - 1]
                stack.append((v, prod * a))
        if leaf:
            total += prod
    q, r = divmod(total, math.factorial(ell))
    if r:
        raise ArithmeticError(f"reduced-word sum {total} not divisible by {ell}!")
    return q


def lehmer_code(w: Sequence[int]) -> list[int]:
    n = len(w)
    return [sum(1 for j in range(i + 1, n) if w[j] < w[i]) for i in range(n)]


def perm_rank(w: Sequence[int]) -> int:
    """Lexicographic rank of ``w`` in ``S_n`` (identity is 0)."""
    n = len(w)
    rank = 0
    for i, c in enumerate(lehmer_code(w)):
        rank += c * math.factorial(n - 1 - i)
    return rank


def _codes(n: int) -> np.ndarray:
    """Lehmer codes of all of ``S_n`` in lex order, shape ``(n!, n)``."""
    total = math.factorial(n)
    ranks = np.arange(total, dtype=np.int64)
    codes = np.empty((total, n), dtype=np.int8)
    for i in range(n):
        codes[:, i] = (ranks // math.factorial(n - 1 - i)) % (n - i)
    return codes


def _decode(codes: np.ndarray) -> np.ndarray:
    """One-line images (1-based) from Lehmer codes."""
    total, n = codes.shape
    avail = np.tile(np.arange(1, n + 1, dtype=np.int8), (total, 1))
    rows = np.arange(total)
    out = np.empty((total, n), dtype=np.int8)
    for i in range(n):
        pick = codes[:, i].astype(np.intp)
        out[:, i] = avail[rows, pick]
        keep = np.ones(avail.shape, dtype=bool)
        keep[rows, pick] = False
        avail = avail[keep].reshape(total, n - 1 - i)
    return out


def ranks_of(perms: np.ndarray) -> np.ndarray:
    """Vectorized lexicographic rank of the rows of ``perms``."""
    total, n = perms.shape
    rank = np.zeros(total, dtype=np.int64)
    for i in range(n):
        c = (perms[:, i + 1:] < perms[:, i:i + 1]).sum(axis=1)
        rank += c * math.factorial(n - 1 - i)
    return rank


@dataclass
class GroupSweep:
    """``Y_w`` for every ``w`` in ``S_n``, rows in lexicographic order."""

    n: int
    perms: np.ndarray  # (n!, n) int8, one-line images
    values: np.ndarray  # (n!,) int64
    lengths: np.ndarray  # (n!,) int16
    _argmax: list[Permutation] | None = field(default=None, repr=False)

    @property
    def u(self) -> int:
        return int(self.values.max())

    @property
    def a(self) -> int:
        return sum(int(x) for x in self.values)

    @property
    def max_value(self) -> int:
        return self.u

    @property
    def argmax_set(self) -> list[Permutation]:
        if self._argmax is None:
            idx = np.flatnonzero(self.values == self.values.max())
            self._argmax = [Permutation._trusted(int(x) for x in self.perms[i]) for i in idx]
        return self._argmax

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, w: Sequence[int]) -> int:
        if len(w) != self.n:
            raise KeyError(w)
        return int(self.values[perm_rank(w)])

    def items(self) -> Iterator[tuple[Permutation, int]]:
        for row, val in zip(self.perms, self.values):
            yield Permutation._trusted(int(x) for x in row), int(val)

    @property
    def table(self) -> dict[Permutation, int]:
        return dict(self.items())

    def partner_values(self) -> np.ndarray:
        """``Y`` of the value complement ``w0 o w`` (``w_i -> n + 1 - w_i``), aligned with rows.

        This is ``w * w0`` when products are read left to right. Complementing
        reverses lex order, so it is just the values read backwards.
        """
        return self.values[::-1]

    def reversed_values(self) -> np.ndarray:
        """``Y_{w w0}`` aligned with rows (``w w0`` reverses the one-line word)."""
        return self.values[ranks_of(self.perms[:, ::-1])]

    def summary(self) -> dict:
        return {
            "n": self.n,
            "u": self.u,
            "a": self.a,
            "argmax": [str(w) for w in self.argmax_set],
        }


def sweep(n: int, max_n: int = DEFAULT_SWEEP_MAX_N) -> GroupSweep:
    """Compute ``Y_w`` for all ``w`` in ``S_n`` by walking weak-order levels upward."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > max_n:
        raise ValueError(f"sweep of S_{n} exceeds guard max_n={max_n}")
    if n > _SWEEP_HARD_MAX_N:
        raise ValueError(f"sweep supports n <= {_SWEEP_HARD_MAX_N}")
    if n == 0:
        empty = np.zeros((1, 0), dtype=np.int8)
        return GroupSweep(0, empty, np.ones(1, dtype=np.int64), np.zeros(1, dtype=np.int16))

    codes = _codes(n)
    lengths = codes.sum(axis=1, dtype=np.int16)
    values = np.zeros(len(codes), dtype=np.int64)
    order = np.argsort(lengths, kind="stable")
    bounds = np.searchsorted(lengths[order], np.arange(lengths.max() + 2))
    values[order[0]] = 1  # identity

    fact = [math.factorial(k) for k in range(n + 1)]
    for ell in range(1, int(lengths.max()) + 1):
        idx = order[bounds[ell]:bounds[ell + 1]]
        c = codes[idx].astype(np.int64)
        acc = np.zeros(len(idx), dtype=np.int64)
        for i in range(n - 1):
            ci, cj = c[:, i], c[:, i + 1]
            hit = ci > cj  # descent at position i+1
            if not hit.any():
                continue
            # swapping a descent: code (ci, cj) -> (cj, ci - 1)
            nbr = idx[hit] + (cj[hit] - ci[hit]) * fact[n - 1 - i] \
                + (ci[hit] - 1 - cj[hit]) * fact[n - 2 - i]
            acc[hit] += (i + 1) * values[nbr]
        q, r = np.divmod(acc, ell)
        if r.any():
            raise ArithmeticError(f"descent recursion not divisible at level {ell}")
        values[idx] = q

    return GroupSweep(n, _decode(codes), values, lengths)

