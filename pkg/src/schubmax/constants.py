"""
The limit constants and the analytic checks around them.

    f(x) = x^2 log x - (1-x)^2 log(1-x) / 2 - (1+x)^2 log(1+x) / 2 + 2x log 2

``alpha`` is the root in (0, 1) of ``q(x) = 2x f(x) + (1 - x^2) f'(x)``
other than ``x = 1``, and ``gamma = f(alpha) / (1 - alpha^2)``. Then
``log v(n) ~ gamma n^2``.

Scalar functions work in mpmath at ``DPS`` digits. Grid scans that touch
10^6 points use a float64 twin of ``f``.
"""

from __future__ import annotations

import math
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import mpmath
import numpy as np
from scipy import integrate

from .layered import DpTable
from .proctor import antidiagonal, log_exact

__all__ = [
    "DPS", "f", "f_prime", "f_second", "q", "q_expanded", "q_prime",
    "f_array", "ConstantsBundle", "solve_constants", "VerificationError",
    "MaxLemmaReport", "verify_max_lemma", "IntegralReport",
    "integral_identity_check", "integral_identity_grid", "BoundScanReport",
    "bound_scan", "LimitGapReport", "limit_gap_scan", "plot_rows",
]

DPS = 40
# slack for representation error only; every compared quantity is O(n^2) at most
_REPR_EPS = mpmath.mpf("1e-25")


class VerificationError(AssertionError):
    def __init__(self, report):
        super().__init__(f"{type(report).__name__} failed: {report.failures[:5]}")
        self.report = report


def _xlogx2(x):
    # x^2 log x with the x = 0 branch
    return mpmath.mpf(0) if x == 0 else x * x * mpmath.log(x)


def _work():
    # never drop below a caller's higher precision
    return mpmath.workdps(max(DPS, mpmath.mp.dps))


def _check_unit(x):
    if x < 0 or x > 1:
        raise ValueError(f"x={x} outside [0, 1]")


def f(x) -> mpmath.mpf:
    """``f(x)`` on ``[0, 1]``; the endpoints are 0 by continuity."""
    with _work():
        x = mpmath.mpf(x)
        _check_unit(x)
        if x == 0 or x == 1:
            return mpmath.mpf(0)
        return +(_xlogx2(x) - (1 - x) ** 2 * mpmath.log(1 - x) / 2
                 - (1 + x) ** 2 * mpmath.log(1 + x) / 2 + 2 * x * mpmath.log(2))


def f_prime(x) -> mpmath.mpf:
    with _work():
        x = mpmath.mpf(x)
        if not 0 < x < 1:
            raise ValueError("f' is evaluated on the open interval (0, 1)")
        return +(2 * x * mpmath.log(x) + (1 - x) * mpmath.log(1 - x)
                 - (1 + x) * mpmath.log(1 + x) + 2 * mpmath.log(2))


def f_second(x) -> mpmath.mpf:
    """``log(x^2 / (1 - x^2))``."""
    with _work():
        x = mpmath.mpf(x)
        if not 0 < x < 1:
            raise ValueError("f'' is evaluated on the open interval (0, 1)")
        return +mpmath.log(x * x / (1 - x * x))


def q(x) -> mpmath.mpf:
    """``2x f(x) + (1 - x^2) f'(x)``, with ``q(1)`` from the expanded form."""
    with _work():
        x = mpmath.mpf(x)
        if x == 1 or x == 0:
            return q_expanded(x)
        return +(2 * x * f(x) + (1 - x * x) * f_prime(x))


def q_expanded(x) -> mpmath.mpf:
    with _work():
        x = mpmath.mpf(x)
        _check_unit(x)
        one_minus = mpmath.mpf(0) if x == 1 else (1 - x) ** 2 * mpmath.log(1 - x)
        xlogx = mpmath.mpf(0) if x == 0 else 2 * x * mpmath.log(x)
        return +(one_minus - (1 + x) ** 2 * mpmath.log(1 + x) + xlogx
                 + 2 * (1 + x * x) * mpmath.log(2))


def q_prime(x) -> mpmath.mpf:
    # the f' terms cancel: q' = 2 f + (1 - x^2) f''
    with _work():
        x = mpmath.mpf(x)
        return +(2 * f(x) + (1 - x * x) * f_second(x))


def f_array(x: np.ndarray) -> np.ndarray:
    """float64 ``f`` for dense grids on ``[0, 1]``."""
    x = np.asarray(x, dtype=float)
    with np.errstate(divide="ignore", invalid="ignore"):
        a = np.where(x > 0, x * x * np.log(np.where(x > 0, x, 1.0)), 0.0)
        om = 1.0 - x
        b = np.where(om > 0, om * om * np.log(np.where(om > 0, om, 1.0)), 0.0)
    return a - b / 2 - (1 + x) ** 2 * np.log1p(x) / 2 + 2 * x * math.log(2)


@dataclass(frozen=True)
class ConstantsBundle:
    alpha: mpmath.mpf
    gamma: mpmath.mpf
    gamma_over_log2: mpmath.mpf
    tolerance: float
    method: str = "newton"

    def as_dict(self, digits: int = 20) -> dict:
        return {
            "alpha": mpmath.nstr(self.alpha, digits),
            "gamma": mpmath.nstr(self.gamma, digits),
            "gamma_over_log2": mpmath.nstr(self.gamma_over_log2, digits),
            "tolerance": self.tolerance,
            "method": self.method,
        }


def solve_constants(tol: float = 1e-14, bracket=(0.1, 0.9), method: str = "newton") -> ConstantsBundle:
    """Bisection on ``q`` inside ``bracket``, optionally Newton-polished."""
    if tol < 1e-14:
        raise ValueError("tol must be >= 1e-14")
    if method not in ("bisection", "newton"):
        raise ValueError(f"unknown method {method!r}")
    with mpmath.workdps(DPS):
        lo, hi = mpmath.mpf(bracket[0]), mpmath.mpf(bracket[1])
        qlo, qhi = q(lo), q(hi)
        if qlo * qhi > 0:
            raise ArithmeticError(f"q has no sign change on [{lo}, {hi}]")
        # bisect well past tol so the Newton step starts inside its basin
        target = mpmath.mpf(tol) / 16 if method == "bisection" else mpmath.mpf(1e-6)
        while hi - lo > target:
            mid = (lo + hi) / 2
            qm = q(mid)
            if qm == 0:
                lo = hi = mid
                break
            if (qm > 0) == (qlo > 0):
                lo, qlo = mid, qm
            else:
                hi = mid
        alpha = (lo + hi) / 2
        if method == "newton":
            for _ in range(50):
                step = q(alpha) / q_prime(alpha)
                alpha -= step
                if abs(step) < mpmath.mpf(10) ** (-DPS + 5):
                    break
        gamma = f(alpha) / (1 - alpha * alpha)
        bundle = ConstantsBundle(+alpha, +gamma, +(gamma / mpmath.log(2)), tol, method)
        if abs(q(alpha)) >= tol:
            raise ArithmeticError(f"|q(alpha)| = {abs(q(alpha))} not below {tol}")
        if abs(gamma + f_prime(alpha) / (2 * alpha)) >= tol:
            raise ArithmeticError("the two expressions for gamma disagree")
    return bundle


@dataclass
class MaxLemmaReport:
    grid_size: int
    grid_max: float
    grid_argmax: float
    cond_slope: mpmath.mpf  # 2 gamma alpha + f'(alpha)
    cond_value: mpmath.mpf  # gamma alpha^2 + f(alpha) - gamma
    curvature: mpmath.mpf  # 2 gamma + f''(alpha)
    f_min_interior: float
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_max_lemma(bundle: ConstantsBundle, grid_size: int = 10**6, strict: bool = True) -> MaxLemmaReport:
    """Check that ``f(x) + gamma x^2`` peaks at ``alpha`` with value ``gamma`` on ``[0, 1)``."""
    if grid_size < 10**3:
        raise ValueError("grid_size must be >= 1000")
    gamma = float(bundle.gamma)
    x = np.arange(grid_size, dtype=float) / grid_size
    vals = f_array(x) + gamma * x * x
    k = int(np.argmax(vals))
    with mpmath.workdps(DPS):
        a, g = bundle.alpha, bundle.gamma
        rep = MaxLemmaReport(
            grid_size=grid_size,
            grid_max=float(vals[k]),
            grid_argmax=float(x[k]),
            cond_slope=2 * g * a + f_prime(a),
            cond_value=g * a * a + f(a) - g,
            curvature=2 * g + f_second(a),
            f_min_interior=float(f_array(x[1:]).min()),
        )
    tol = bundle.tolerance
    if rep.grid_max > gamma + 1e-12:
        rep.failures.append(f"grid max {rep.grid_max!r} exceeds gamma")
    if abs(rep.grid_argmax - float(bundle.alpha)) > 1.0 / grid_size:
        rep.failures.append(f"grid argmax {rep.grid_argmax} not within one step of alpha")
    if abs(rep.cond_slope) >= tol:
        rep.failures.append("2 gamma alpha + f'(alpha) != 0")
    if abs(rep.cond_value) >= tol:
        rep.failures.append("gamma alpha^2 + f(alpha) != gamma")
    if not rep.curvature < 0:
        rep.failures.append("2 gamma + f''(alpha) is not negative")
    if not rep.f_min_interior > 0:
        rep.failures.append("f is not positive on (0, 1)")
    if strict and rep.failures:
        raise VerificationError(rep)
    return rep


@dataclass
class IntegralReport:
    m: int
    p: int
    quadrature: float
    closed_form: float
    rel_error: float
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def integral_identity_check(m: int, p: int, rtol: float = 1e-6, strict: bool = True) -> IntegralReport:
    """Adaptive quadrature of ``log(2m+x+y) - log(x+y)`` over ``0 <= y <= x <= p``
    against ``(m+p)^2 f(m/(m+p))``."""
    if m < 0 or p < 0:
        raise ValueError("need m, p >= 0")
    if m + p > 200:
        raise ValueError("quadrature check limited to m + p <= 200")
    closed = 0.0 if m + p == 0 else float((m + p) ** 2 * f(mpmath.mpf(m) / (m + p)))
    if m == 0 or p == 0:
        quad = 0.0
    else:
        def g(x, y):
            return math.log(2 * m + x + y) - math.log(x + y) if x + y > 0 else 0.0

        with warnings.catch_warnings():
            warnings.simplefilter("error", integrate.IntegrationWarning)
            try:
                # inner variable x runs over [y, p], outer y over [0, p]
                quad, _ = integrate.dblquad(g, 0, p, lambda y: y, lambda y: p,
                                            epsabs=1e-11, epsrel=1e-11)
            except integrate.IntegrationWarning as exc:
                raise ArithmeticError(f"quadrature did not converge for m={m}, p={p}: {exc}") from None
    denom = abs(closed) if closed else 1.0
    rep = IntegralReport(m, p, quad, closed, abs(quad - closed) / denom)
    if rep.rel_error >= rtol:
        rep.failures.append(f"relative error {rep.rel_error:.3e} >= {rtol}")
    if strict and rep.failures:
        raise VerificationError(rep)
    return rep


def _integral_task(mp_pair):
    m, p = mp_pair
    return integral_identity_check(m, p, strict=False)


def integral_identity_grid(ms, ps, workers: int = 1) -> list[IntegralReport]:
    pairs = [(m, p) for m in ms for p in ps]
    if workers <= 1:
        return [_integral_task(pr) for pr in pairs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_integral_task, pairs, chunksize=8))


@dataclass
class BoundScanReport:
    limit: int
    pairs_checked: int
    max_upper: mpmath.mpf  # max of log F - n^2 f(m/n), excluding exact zeros
    min_lower_slack: mpmath.mpf  # min of (log F - n^2 f) + 2n
    failures: list[tuple[int, int, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def bound_scan(limit: int, strict: bool = True) -> BoundScanReport:
    """``-2n <= log F(m, n-m) - n^2 f(m/n) <= 0`` for all ``0 <= m <= n <= limit``, ``n >= 1``."""
    if not 1 <= limit <= 400:
        raise ValueError("limit must be in 1..400")
    checked = 0
    max_upper = mpmath.mpf("-inf")
    min_slack = mpmath.mpf("inf")
    failures = []
    with mpmath.workdps(DPS):
        for n in range(1, limit + 1):
            n2 = n * n
            # p = 0 row: F(n, 0) = 1 and f(1) = 0
            entries = [(0, 1)] + list(antidiagonal(n))
            for p, value in entries:
                m = n - p
                d = log_exact(value) - n2 * f(mpmath.mpf(m) / n)
                checked += 1
                if d != 0 and d > max_upper:
                    max_upper = d
                slack = d + 2 * n
                if slack < min_slack:
                    min_slack = slack
                if d > _REPR_EPS:
                    failures.append((m, n, f"upper bound violated by {mpmath.nstr(d, 8)}"))
                if slack < -_REPR_EPS:
                    failures.append((m, n, f"lower bound violated by {mpmath.nstr(-slack, 8)}"))
    rep = BoundScanReport(limit, checked, max_upper, min_slack, failures)
    if strict and failures:
        raise VerificationError(rep)
    return rep


@dataclass
class LimitGapReport:
    limit: int
    gaps: dict[int, mpmath.mpf]  # n -> log v(n) - gamma n^2
    failures: list[tuple[int, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def gap_over_n(self, n: int) -> mpmath.mpf:
        return self.gaps[n] / n


def limit_gap_scan(table: DpTable, bundle: ConstantsBundle, strict: bool = True) -> LimitGapReport:
    """``|log v(n) - gamma n^2| <= 4n`` for ``2 <= n <= table.limit``."""
    gaps = {}
    failures = []
    with mpmath.workdps(DPS):
        for n in range(2, table.limit + 1):
            gap = log_exact(table.v[n]) - bundle.gamma * n * n
            gaps[n] = +gap
            if abs(gap) > 4 * n:
                failures.append((n, f"|gap| = {mpmath.nstr(abs(gap), 8)} > {4 * n}"))
    rep = LimitGapReport(table.limit, gaps, failures)
    if strict and failures:
        raise VerificationError(rep)
    return rep


def plot_rows(bundle: ConstantsBundle, points: int = 200) -> list[tuple[float, float, float, float]]:
    """``(x, f(x), q(x), gamma x^2 + f(x))`` on an interior grid of ``(0, 1)``."""
    rows = []
    g = bundle.gamma
    for k in range(1, points):
        x = mpmath.mpf(k) / points
        fx = f(x)
        rows.append((float(x), float(fx), float(q(x)), float(g * x * x + fx)))
    return rows
