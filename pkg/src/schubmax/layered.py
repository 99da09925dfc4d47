"""
The maximum ``v(n)`` of ``Y_w`` over layered permutations of size ``n``.

Peeling the last layer ``b_1 = p`` off a layered permutation multiplies
``Y`` by ``F(n - p, p)``, so

    v(n) = max over 1 <= p <= n of  v(n - p) * F(n - p, p)

All comparisons are exact integer comparisons; ties go to the smallest ``p``.
"""

from __future__ import annotations

import csv
import logging
from dataclasses import dataclass
from importlib import resources
from typing import Sequence

import mpmath

from .perm import Composition, format_composition, parse_composition
from .proctor import F, antidiagonal, log2_exact

__all__ = [
    "DpTable", "build", "upsilon_layered", "composition_of", "f_ratio",
    "format_f6", "format_fixed", "AppendixRow", "load_appendix", "diff_against_appendix",
]

log = logging.getLogger(__name__)


def upsilon_layered(parts: Sequence[int]) -> int:
    """``Y`` of ``w(b_k, ..., b_1)`` as a product of ``F`` factors."""
    parts = Composition(parts)
    total = parts.total
    value = 1
    for b in reversed(parts):
        value *= F(total - b, b)
        total -= b
    return value


@dataclass
class DpTable:
    limit: int
    v: list[int]  # v[n] for 0 <= n <= limit, v[0] = 1
    argmax_p: list[int]  # chosen last layer; argmax_p[0] = 0

    def composition(self, n: int) -> Composition:
        return composition_of(n, self)

    def f_ratio(self, n: int) -> mpmath.mpf:
        return f_ratio(n, self)

    def rows(self) -> list[tuple[int, Composition, str]]:
        return [(n, self.composition(n), format_f6(self.f_ratio(n))) for n in range(1, self.limit + 1)]


def build(limit: int) -> DpTable:
    """Fill ``v(1..limit)`` by exact comparison over every last-layer size."""
    if limit < 1:
        raise ValueError("limit must be >= 1")
    v = [1]
    argmax_p = [0]
    for n in range(1, limit + 1):
        best, best_p = -1, 0
        for p, f in antidiagonal(n):
            cand = v[n - p] * f
            if cand > best:  # strict: smallest p wins ties
                best, best_p = cand, p
        v.append(best)
        argmax_p.append(best_p)
        if n % 50 == 0:
            log.debug("dp row %d: %d bits", n, best.bit_length())
    return DpTable(limit, v, argmax_p)


def composition_of(n: int, table: DpTable) -> Composition:
    """Back-trace the chosen layers into ``(..., b_2, b_1)``."""
    if not 0 <= n <= table.limit:
        raise ValueError(f"n={n} outside table range 0..{table.limit}")
    parts = []
    while n > 0:
        p = table.argmax_p[n]
        parts.append(p)
        n -= p
    return Composition(reversed(parts))


def f_ratio(n: int, table: DpTable) -> mpmath.mpf:
    """``log2(v(n)) / n^2``."""
    if not 1 <= n <= table.limit:
        raise ValueError(f"n={n} outside table range 1..{table.limit}")
    with mpmath.workdps(40):
        return log2_exact(table.v[n]).value / (n * n)


def format_fixed(x, digits: int = 6) -> str:
    """Fixed point with trailing zeros, round-half-even."""
    with mpmath.workdps(60):
        q = int(mpmath.nint(mpmath.mpf(x) * 10**digits))  # nint rounds half to even
    sign = "-" if q < 0 else ""
    q = abs(q)
    if digits == 0:
        return f"{sign}{q}"
    return f"{sign}{q // 10**digits}.{q % 10**digits:0{digits}d}"


def format_f6(x) -> str:
    return format_fixed(x, 6)


@dataclass(frozen=True)
class AppendixRow:
    n: int
    composition: Composition
    f6: str


def load_appendix() -> list[AppendixRow]:
    """The 300-row table shipped with the package (columns ``n,composition,f6``)."""
    text = resources.files("schubmax").joinpath("data/appendix.csv").read_text()
    reader = csv.DictReader(text.splitlines())
    return [AppendixRow(int(r["n"]), parse_composition(r["composition"]), r["f6"]) for r in reader]


@dataclass
class DiffEntry:
    n: int
    kind: str  # "composition" | "f6" | "last-digit"
    ours: str
    theirs: str


def diff_against_appendix(table: DpTable, rows: list[AppendixRow] | None = None) -> list[DiffEntry]:
    """Compare regenerated rows with the shipped transcription.

    ``composition`` and ``f6`` entries are real mismatches. A ``last-digit``
    entry means the printed value is the truncation rather than the rounding
    of the exact ``f(n)``, so all six printed digits are still correct.
    """
    rows = load_appendix() if rows is None else rows
    out: list[DiffEntry] = []
    for row in rows:
        if row.n > table.limit:
            continue
        comp = table.composition(row.n)
        if comp != row.composition:
            out.append(DiffEntry(row.n, "composition", format_composition(comp), format_composition(row.composition)))
        exact = table.f_ratio(row.n)
        ours = format_f6(exact)
        if ours != row.f6:
            with mpmath.workdps(40):
                truncated = mpmath.floor(exact * 10**6)
            kind = "last-digit" if format_f6(truncated / 10**6) == row.f6 else "f6"
            out.append(DiffEntry(row.n, kind, ours, row.f6))
    return out
