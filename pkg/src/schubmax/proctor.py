"""
Exact values of ``F(m, p) = Y_{1^m x w0(p)}``.

``F(m, p)`` is Proctor's product over ``1 <= i < j <= p`` of
``(2m + i + j - 1) / (i + j - 1)``, which also counts plane partitions of
the staircase ``(p-1, ..., 1)`` with entries at most ``m``. Three routes
are provided so they can check each other: the product itself, a
superfactorial quotient, and brute-force plane-partition counting.
``antidiagonal`` walks ``m + p = n`` with one multiply and one exact
divide per step, which is what the layered DP uses.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

import mpmath

__all__ = [
    "F", "F_superfactorial", "plane_partition_count", "antidiagonal",
    "superfactorial_phi", "superfactorial_lambda",
    "LogValue", "log2_exact", "log_exact",
]

PLANE_PARTITION_MAX = 6
_LOG_DPS = 60
_MANTISSA_BITS = 128


def _exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"inexact division {num} / {den}")
    return q


def F(m: int, p: int) -> int:
    """Proctor's product formula, numerator and denominator kept apart until the end."""
    if m < 0 or p < 0:
        raise ValueError("need m >= 0 and p >= 0")
    num = den = 1
    for j in range(2, p + 1):
        for i in range(1, j):
            num *= 2 * m + i + j - 1
            den *= i + j - 1
    return _exact_div(num, den)


@lru_cache(maxsize=None)
def superfactorial_phi(n: int) -> int:
    """``1! 2! ... (n-1)!`` with ``Phi(0) = Phi(1) = 1``."""
    out = 1
    for k in range(1, n):
        out *= math.factorial(k)
    return out


@lru_cache(maxsize=None)
def superfactorial_lambda(n: int) -> int:
    """``(n-2)! (n-4)! ...`` over nonnegative arguments; empty product below 2."""
    out = 1
    for k in range(n - 2, -1, -2):
        out *= math.factorial(k)
    return out


def F_superfactorial(m: int, p: int) -> int:
    """``Lambda(2m+2p) Lambda(2m+1) Phi(p) / (Phi(2m+p) Lambda(2p))``."""
    if m < 0 or p < 1:
        raise ValueError("need m >= 0 and p >= 1")
    lam, phi = superfactorial_lambda, superfactorial_phi
    num = lam(2 * m + 2 * p) * lam(2 * m + 1) * phi(p)
    den = phi(2 * m + p) * lam(2 * p)
    return _exact_div(num, den)


def plane_partition_count(m: int, p: int) -> int:
    """Count fillings of the staircase ``(p-1, ..., 1)`` by ``0..m``, weakly
    decreasing along rows and down columns."""
    if m < 0 or p < 1:
        raise ValueError("need m >= 0 and p >= 1")
    if m > PLANE_PARTITION_MAX or p > PLANE_PARTITION_MAX:
        raise ValueError(f"plane-partition oracle limited to m, p <= {PLANE_PARTITION_MAX}")
    shape = list(range(p - 1, 0, -1))
    if not shape:
        return 1
    # row-by-row transfer: a row is a weakly decreasing tuple bounded above
    # entrywise by the row over it
    def rows_under(upper: tuple[int, ...], width: int) -> Iterator[tuple[int, ...]]:
        def rec(k: int, cap: int, acc: list[int]):
            if k == width:
                yield tuple(acc)
                return
            for x in range(min(cap, upper[k]), -1, -1):
                acc.append(x)
                yield from rec(k + 1, x, acc)
                acc.pop()
        yield from rec(0, m, [])

    counts = {row: 1 for row in rows_under((m,) * shape[0], shape[0])}
    for width in shape[1:]:
        nxt: dict[tuple[int, ...], int] = {}
        for upper, c in counts.items():
            for row in rows_under(upper, width):
                nxt[row] = nxt.get(row, 0) + c
        counts = nxt
    return sum(counts.values())


@lru_cache(maxsize=8)
def _factorials(top: int) -> list[int]:
    out = [1]
    for k in range(1, top + 1):
        out.append(out[-1] * k)
    return out


def antidiagonal(n: int) -> Iterator[tuple[int, int]]:
    """Yield ``(p, F(n - p, p))`` for ``p = 1, ..., n``.

    Steps ``(m, p) -> (m - 1, p + 1)`` using the superfactorial form::

        F(m-1, p+1) = F(m, p) * p! * (n+m-1)! / ((2m-1)! * (2p)!)
    """
    if n < 1:
        return
    fact = _factorials(2 * n)
    value, m, p = 1, n - 1, 1
    yield p, value
    while m > 0:
        value = _exact_div(value * fact[p] * fact[n + m - 1], fact[2 * m - 1] * fact[2 * p])
        m -= 1
        p += 1
        yield p, value


@dataclass(frozen=True)
class LogValue:
    value: mpmath.mpf
    abs_error_bound: float

    def __float__(self) -> float:
        return float(self.value)


def log2_exact(x: int) -> LogValue:
    """``log2(x)`` from the bit length and the top 128 bits."""
    if x < 1:
        raise ValueError("log2_exact needs x >= 1")
    with mpmath.workdps(_LOG_DPS):
        bits = x.bit_length()
        if bits <= _MANTISSA_BITS:
            return LogValue(mpmath.log(mpmath.mpf(x), 2), 1e-50)
        shift = bits - _MANTISSA_BITS
        top = x >> shift
        # x / 2^shift lies in [top, top + 1)
        val = shift + mpmath.log(mpmath.mpf(top), 2)
        return LogValue(+val, 2.0 ** -(_MANTISSA_BITS - 2))


def log_exact(x: int) -> mpmath.mpf:
    """Natural log of a big integer at working precision."""
    with mpmath.workdps(_LOG_DPS):
        return log2_exact(x).value * mpmath.log(2)
