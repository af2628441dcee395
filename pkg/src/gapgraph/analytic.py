"""Explicit constants, bound functions and threshold inequalities.

Every quantity that may be astronomically large is carried as a
:class:`~gapgraph.logvalue.LogValue`. The two threshold inequalities are
written on the scale ``t = log log p_n`` where both sides are ordinary
doubles for ``t <= 700``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Callable

from .exceptions import DomainError, SearchError
from .logvalue import LogValue

ZERO_DENSITY_TWO_TERM = (2.177, 5.663)
ZERO_DENSITY_ONE_TERM = 2.375
SN_FACTOR = 8.7
FIRST_MOMENT_FACTOR = 8.1
EXPLICIT_FORMULA_FACTOR = 4.6
DUSART_LOWER_FROM = 599
DUSART_UPPER_FROM = 355991
CASE2_ALPHA = 0.249
DPG_ALPHA = 1 / 13
CASE2_TARGET_T = 30.5
DPG_TARGET_T = 34.5


@dataclass(frozen=True)
class AnalyticParams:
    c0: float = 1 / 53.989
    A: float = 8 / 3
    c1: float = ZERO_DENSITY_ONE_TERM
    H0: float = 3e12
    alpha: float = CASE2_ALPHA

    def __post_init__(self):
        if not 2 <= self.A <= 4:
            raise DomainError(f"A={self.A} outside [2, 4]")
        if not 0 < self.alpha < 2 / self.A:
            raise DomainError(f"alpha={self.alpha} outside (0, 2/A)")
        if self.c0 <= 0 or self.c1 <= 0:
            raise DomainError("c0 and c1 must be positive")

    def with_alpha(self, alpha: float) -> AnalyticParams:
        return replace(self, alpha=alpha)

    def to_json(self) -> dict:
        return {"c0": self.c0, "A": self.A, "c1": self.c1, "H0": self.H0, "alpha": self.alpha}


@dataclass(frozen=True)
class BoundResult:
    """A bound value plus the hypotheses under which it is guaranteed."""

    value: LogValue
    hypotheses: dict[str, bool] = field(default_factory=dict)

    @property
    def extrapolated(self) -> bool:
        return not all(self.hypotheses.values())


def _ln(x) -> float:
    return LogValue.of(x).ln()


def eta(t: float, c0: float = 1 / 53.989, scale: str = "linear") -> float:
    """Width of the zero-free region at height t: c0 / ((log t)^(2/3) (log log t)^(1/3)).

    With ``scale="log"`` the argument is ``log t`` itself, which keeps huge
    heights exact.
    """
    if scale == "linear":
        if t <= math.e:
            raise DomainError(f"eta needs t > e, got {t}")
        lt = math.log(t)
    elif scale == "log":
        lt = float(t)
        if lt <= 1:
            raise DomainError(f"eta needs log t > 1, got {lt}")
    else:
        raise DomainError(f"unknown scale {scale!r}")
    return c0 * lt ** (-2 / 3) * math.log(lt) ** (-1 / 3)


@dataclass(frozen=True)
class ZeroDensityBound:
    two_term: LogValue
    one_term: LogValue


def zero_density_bound(sigma: float, T) -> ZeroDensityBound:
    """Both explicit bounds on N(sigma, T) for 3/5 <= sigma <= 1 and T > H0."""
    if not 0.6 <= sigma <= 1:
        raise DomainError(f"sigma={sigma} outside [3/5, 1]")
    lT = _ln(T)
    if lT <= math.log(AnalyticParams().H0):
        raise DomainError("zero-density bound needs T > H0")
    llT = math.log(lT)
    shape = LogValue.exp((5 - 2 * sigma) * llT + (8 / 3) * (1 - sigma) * lT)
    a, b = ZERO_DENSITY_TWO_TERM
    two = a * shape + LogValue.exp(math.log(b) + 2 * llT)
    one = ZERO_DENSITY_ONE_TERM * shape
    assert two <= one
    return ZeroDensityBound(two, one)


def big_constant_C(params: AnalyticParams) -> float:
    A, a = params.A, params.alpha
    return 4 * 1836 * params.c1 / (A * a) * (2 / A - a) ** 4


def sn_bound(x, N, params: AnalyticParams, M) -> BoundResult:
    """Upper bound for S_N(x), the sum of gaps above N starting below x.

    ``M(x) log x + 8.7 C x^(1 - A alpha eta(4 x log^2 x / N)) log^4 x``.
    """
    a = params.alpha
    if not 0 < a < 0.75:
        raise DomainError(f"alpha={a} outside (0, 3/4)")
    lx, lN = _ln(x), _ln(N)
    llx = math.log(lx)
    log_t = math.log(4) + lx + 2 * llx - lN
    exponent = 1 - params.A * a * eta(log_t, params.c0, scale="log")
    second = LogValue.exp(math.log(SN_FACTOR * big_constant_C(params)) + exponent * lx + 4 * llx)
    value = LogValue.of(M) * lx + second
    hyp = {
        "x>=exp(4000)": lx >= 4000,
        "N>=8x^(1/4+alpha)log^3x": lN >= math.log(8) + (0.25 + a) * lx + 3 * llx,
    }
    return BoundResult(value, hyp)


def first_moment_bound(x, delta: float, Ival, max_gap) -> BoundResult:
    """``max_gap + 8.1 * I / (delta^2 x^2)`` for the gap sum over [x, 2x]."""
    if not 0 < delta <= 1:
        raise DomainError(f"delta={delta} outside (0, 1]")
    lx = _ln(x)
    value = LogValue.of(max_gap) + FIRST_MOMENT_FACTOR * LogValue.of(Ival) / LogValue.exp(
        2 * math.log(delta) + 2 * lx
    )
    hyp = {
        "x>=exp(1000)": lx >= 1000,
        "4*delta*x>8log^2x": math.log(4 * delta) + lx > math.log(8) + 2 * math.log(lx),
    }
    return BoundResult(value, hyp)


def integral_I_bound(x, T, delta: float, params: AnalyticParams) -> BoundResult:
    """``C delta^2 x^(3 - A alpha eta(T)) log^4 x`` for the mean square of the zero sum."""
    if not 0 < delta <= 1:
        raise DomainError(f"delta={delta} outside (0, 1]")
    lx, lT = _ln(x), _ln(T)
    llx = math.log(lx)
    A, a = params.A, params.alpha
    if lT <= math.log(10):
        raise DomainError("integral bound needs T > 10 (lower side violated)")
    if lT > (2 / A - a) * lx - llx:
        raise DomainError("integral bound needs T <= x^(2/A - alpha)/log x (upper side violated)")
    exponent = 3 - A * a * eta(lT, params.c0, scale="log")
    value = LogValue.exp(math.log(big_constant_C(params)) + 2 * math.log(delta) + exponent * lx + 4 * llx)
    return BoundResult(value, {"x>=exp(1000)": lx >= 1000})


def dyadic_tail_constant(terms: int = 400) -> float:
    """Partial sum of sum_{j>=1} 2^(-j (1 - (8/3)(3/4)(1/40)))."""
    r = 2.0 ** -(1 - (8 / 3) * (3 / 4) / 40)
    return math.fsum(r**j for j in range(1, terms + 1))


# --- threshold inequalities on the t = log log p_n scale --------------------


@dataclass(frozen=True)
class ThresholdSides:
    lhs: float
    rhs: float

    @property
    def holds(self) -> bool:
        return self.lhs < self.rhs


def _log_term_ratio(t: float, L: float, coeff: float) -> float:
    return coeff * math.exp(t) / (L ** (2 / 3) * math.log(L) ** (1 / 3))


def threshold_case2(t: float, params: AnalyticParams | None = None) -> ThresholdSides:
    """Sides of the large-gap inequality that closes the graphicality proof."""
    if t <= 1:
        raise DomainError("t must exceed 1")
    params = (params or AnalyticParams()).with_alpha(CASE2_ALPHA)
    C = big_constant_C(params)
    L1 = 0.5 * math.exp(t) + 3 * t + math.log(12)
    lhs = math.log(3 * SN_FACTOR * C) + 5 * t
    rhs = _log_term_ratio(t, L1, params.A * params.alpha * params.c0)
    return ThresholdSides(lhs, rhs)


def threshold_dpg(t: float, params: AnalyticParams | None = None) -> ThresholdSides:
    """Sides of the inequality behind the growth-step result."""
    if t <= 1:
        raise DomainError("t must exceed 1")
    params = (params or AnalyticParams()).with_alpha(DPG_ALPHA)
    C = big_constant_C(params)
    L2 = (2 / 3) * math.exp(t) + 2 * t + math.log(48)
    lhs = math.log(4 * SN_FACTOR * C) + 4 * t
    rhs = _log_term_ratio(t, L2, params.A * params.alpha * params.c0)
    return ThresholdSides(lhs, rhs)


THRESHOLDS: dict[str, tuple[Callable[[float], ThresholdSides], float]] = {
    "case2": (threshold_case2, CASE2_TARGET_T),
    "dpg": (threshold_dpg, DPG_TARGET_T),
}


@dataclass(frozen=True)
class ThresholdReport:
    which: str
    t_min: float
    fails_below: float
    holds_at_target: bool
    target_t: float
    samples: list[tuple[float, float, float]]

    def to_json(self) -> dict:
        return {
            "which": self.which,
            "tMin": self.t_min,
            "failsBelow": self.fails_below,
            "targetT": self.target_t,
            "holdsAtTarget": self.holds_at_target,
            "samples": [{"t": t, "lhs": l, "rhs": r, "holds": l < r} for t, l, r in self.samples],
        }


def grid(lo: float, hi: float, step: float) -> list[float]:
    count = int(math.floor((hi - lo) / step + 1e-9))
    return [round(lo + i * step, 10) for i in range(count + 1)]


def sign_changes(which: str, lo: float, hi: float, step: float = 0.01) -> int:
    f = THRESHOLDS[which][0]
    states = [f(t).holds for t in grid(lo, hi, step)]
    return sum(a != b for a, b in zip(states, states[1:]))


def find_threshold(which: str, lo: float, hi: float, tol: float = 1e-3, step: float = 0.01) -> ThresholdReport:
    """Bisect for the smallest t where the inequality holds, then sweep upward.

    The bracket invariant is: fails at ``lo``, holds at ``hi``. After
    bisection a grid sweep from the crossing to ``hi`` confirms there is no
    second crossing.
    """
    if which not in THRESHOLDS:
        raise DomainError(f"unknown threshold {which!r}")
    f, target_t = THRESHOLDS[which]
    if f(lo).holds or not f(hi).holds:
        raise SearchError(f"no sign change for {which} on [{lo}, {hi}]")
    a, b = lo, hi
    while b - a > tol:
        mid = 0.5 * (a + b)
        if f(mid).holds:
            b = mid
        else:
            a = mid
    samples = []
    for t in [b] + [s for s in grid(lo, hi, step) if s > b]:
        sides = f(t)
        if not sides.holds:
            raise SearchError(f"{which} re-crosses at t={t}")
        samples.append((t, sides.lhs, sides.rhs))
    return ThresholdReport(which, b, a, f(target_t).holds, target_t, samples)


# --- auxiliary bounds for zeta'/zeta and the truncated explicit formula ------


def delange_bound(sigma: float) -> float:
    """Bound for |zeta'/zeta(sigma + it)| when sigma > 1."""
    if sigma <= 1:
        raise DomainError("needs sigma > 1")
    return 1 / (sigma - 1) - 1 / (2 * sigma**2)


def left_halfplane_bound(sigma: float, t: float) -> float:
    """Bound ``9 + log|sigma + it|`` for sigma <= -1 away from trivial zeros."""
    if sigma > -1:
        raise DomainError("needs sigma <= -1")
    odd_integer = float(sigma).is_integer() and int(sigma) % 2 == 1
    if not (odd_integer or abs(t) >= 1):
        raise DomainError("needs sigma an odd integer or |t| >= 1")
    return 9 + math.log(abs(complex(sigma, t)))


def shifted_line_bound(t: float) -> float:
    """``log^2 t + 20 log t``, valid on a nearby horizontal line for t > 50."""
    if t <= 50:
        raise DomainError("needs t > 50")
    lt = math.log(t)
    return lt * lt + 20 * lt


def explicit_formula_error(x: float, T: float) -> BoundResult:
    """Truncation envelope ``4.6 x log x log log x / T`` of the explicit formula."""
    if x <= math.e or T <= 0:
        raise DomainError("needs x > e and T > 0")
    lx = math.log(x)
    value = EXPLICIT_FORMULA_FACTOR * x * lx * math.log(lx) / T
    hyp = {"x>1e18": x > 1e18, "50<T<x-1": 50 < T < x - 1, "x not integer": not float(x).is_integer()}
    return BoundResult(LogValue.of(value), hyp)


def auxiliary_zeta_bounds(kind: str, *, sigma: float | None = None, t: float | None = None,
                          x: float | None = None, T: float | None = None) -> float:
    """Dispatch to one of the auxiliary bounds by name."""
    if kind == "delange":
        return delange_bound(sigma)
    if kind == "left":
        return left_halfplane_bound(sigma, t)
    if kind == "shifted":
        return shifted_line_bound(t)
    if kind == "explicit":
        return explicit_formula_error(x, T).value.to_float()
    raise DomainError(f"unknown bound {kind!r}")


@dataclass(frozen=True)
class DusartBounds:
    lower: float
    upper: float
    lower_applies: bool
    upper_applies: bool


def dusart_bounds(x: float) -> DusartBounds:
    lx = math.log(x)
    base = x / lx * (1 + 1 / lx)
    return DusartBounds(base, base + x / lx * 2.51 / lx**2, x >= DUSART_LOWER_FROM, x >= DUSART_UPPER_FROM)


def dusart_sweep(limit: int = 10**8, points: int = 10_000) -> dict:
    """Compare pi(x) with both bounds at integer points of a log grid.

    Comparisons are exact: pi(x) >= lower iff pi(x) >= ceil(lower), with the
    bound evaluated in 40-digit arithmetic.
    """
    import mpmath
    import numpy as np

    from .primes import primes_upto

    primes = primes_upto(limit)
    xs = np.unique(np.round(np.geomspace(DUSART_LOWER_FROM, limit, points)).astype(np.int64))
    pis = np.searchsorted(primes, xs, side="right")
    rows, failures = [], []
    with mpmath.workdps(40):
        for x, p in zip(xs.tolist(), pis.tolist()):
            lx = mpmath.log(x)
            lower = x / lx * (1 + 1 / lx)
            upper = lower + x / lx * mpmath.mpf("2.51") / lx**2
            lower_ok = p >= int(mpmath.ceil(lower))
            upper_ok = p <= int(mpmath.floor(upper)) if x >= DUSART_UPPER_FROM else None
            rows.append({"x": x, "pi": p, "lowerMargin": float(p - lower),
                         "upperMargin": float(upper - p) if upper_ok is not None else None})
            if not lower_ok or upper_ok is False:
                failures.append(x)
    return {"limit": limit, "points": len(rows), "failures": failures, "rows": rows,
            "pass": not failures}
