"""Zeta zero tables and empirical checks against them.

Every ordinate in a table lies far below H0 = 3e12, so each zero is taken
to be exactly 1/2 + i*gamma. Sums over zeros are folded over conjugate
pairs: x^rho/rho + x^conj(rho)/conj(rho) = 2 Re(x^rho/rho).
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass

import numpy as np

from .analytic import AnalyticParams, explicit_formula_error
from .exceptions import DomainError, InsufficientDataError, ScaleRefusal, ZeroTableError
from .primes import psi

QUADRATURE_MAX_COST = 4 * 10**8  # nodes x zeros
QUADRATURE_NODES = 16


@dataclass(frozen=True)
class ZeroTable:
    ordinates: np.ndarray

    def __post_init__(self):
        g = np.asarray(self.ordinates, dtype=np.float64)
        if g.size == 0:
            raise ZeroTableError("empty zero table")
        if g[0] <= 0:
            raise ZeroTableError("ordinates must be positive")
        if np.any(np.diff(g) <= 0):
            bad = int(np.flatnonzero(np.diff(g) <= 0)[0]) + 1
            raise ZeroTableError(f"ordinates not strictly ascending at entry {bad + 1}")
        if g[-1] >= AnalyticParams().H0:
            raise ZeroTableError("ordinates must lie below H0")
        g.setflags(write=False)
        object.__setattr__(self, "ordinates", g)

    @property
    def count(self) -> int:
        return int(self.ordinates.size)

    @property
    def max_ordinate(self) -> float:
        return float(self.ordinates[-1])

    def below(self, T: float) -> np.ndarray:
        return self.ordinates[: np.searchsorted(self.ordinates, T, side="left")]

    def count_below(self, t: float) -> int:
        """N(t): zeros with 0 < gamma < t."""
        return int(np.searchsorted(self.ordinates, t, side="left"))


def load_zeros(path: str | os.PathLike) -> ZeroTable:
    """Read one decimal ordinate per line; ``#`` starts a comment line."""
    values = []
    prev = 0.0
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            text = line.strip()
            if not text or text.startswith("#"):
                continue
            try:
                g = float(text)
            except ValueError:
                raise ZeroTableError(f"cannot parse {text!r}", lineno) from None
            if not math.isfinite(g) or g <= 0:
                raise ZeroTableError(f"ordinate {text} is not positive", lineno)
            if g <= prev:
                raise ZeroTableError(f"ordinate {text} is not above the previous one", lineno)
            values.append(g)
            prev = g
    if not values:
        raise ZeroTableError(f"{path}: no ordinates")
    return ZeroTable(np.array(values))


def rect_count_check(z: ZeroTable, step: float = 0.5) -> dict:
    """Check N(t+1) - N(t-1) < log t on a grid and at midpoints between zeros.

    Only t with t + 1 <= max ordinate are used, so every count is complete.
    """
    if z.max_ordinate <= 12:
        raise InsufficientDataError("need ordinates above 12")
    g = z.ordinates
    hi = z.max_ordinate - 1
    ts = np.arange(10.5, hi + 1e-9, step)
    mids = 0.5 * (g[1:] + g[:-1])
    mids = mids[(mids > 10) & (mids <= hi)]
    ts = np.concatenate([ts, mids])
    counts = np.searchsorted(g, ts + 1, side="left") - np.searchsorted(g, ts - 1, side="left")
    logs = np.log(ts)
    bad = np.flatnonzero(counts >= logs)
    worst = int(np.argmax(counts / logs))
    return {
        "points": int(ts.size),
        "tMax": float(hi),
        "violations": [{"t": float(ts[i]), "count": int(counts[i]), "logT": float(logs[i])} for i in bad[:50]],
        "violationCount": int(bad.size),
        "worst": {"t": float(ts[worst]), "count": int(counts[worst]), "logT": float(logs[worst])},
        "pass": bad.size == 0,
    }


def _nudge(x: float) -> float:
    return x + 0.5 if float(x).is_integer() else float(x)


def zero_sum(x: float, gammas: np.ndarray) -> float:
    """sum over |gamma| < T of x^rho / rho, folded over conjugate pairs (real)."""
    rho = 0.5 + 1j * gammas
    terms = np.exp(rho * math.log(x)) / rho
    return float(2.0 * terms.real.sum())


def explicit_formula_psi(x: float, T: float, z: ZeroTable) -> tuple[float, float]:
    """``(x - sum_rho x^rho/rho, 4.6 x log x loglog x / T)`` with zeros below T.

    Integer x is moved to x + 1/2 first.
    """
    if x <= 10:
        raise DomainError("needs x > 10")
    if T <= 50:
        raise DomainError("needs T > 50")
    if T > z.max_ordinate:
        raise InsufficientDataError(f"T={T} exceeds the table's max ordinate {z.max_ordinate}")
    x = _nudge(x)
    approx = x - zero_sum(x, z.below(T))
    return approx, explicit_formula_error(x, T).value.to_float()


def explicit_formula_matrix(z: ZeroTable, xs, Ts) -> list[dict]:
    """Error ratios |approx - psi(x)| / envelope for each (x, T) pair."""
    rows = []
    for x in xs:
        x = _nudge(x)
        exact = psi(int(math.floor(x)))
        for T in Ts:
            approx, env = explicit_formula_psi(x, T, z)
            err = abs(approx - exact)
            rows.append({"x": x, "T": T, "psi": exact, "approx": approx,
                         "error": err, "envelope": env, "ratio": err / env})
    return rows


def _zero_coefficients(gammas: np.ndarray, delta: float) -> tuple[np.ndarray, np.ndarray]:
    rho = 0.5 + 1j * gammas
    return rho, (1 - np.exp(rho * math.log1p(delta))) / rho


def _gl_integral(x: float, rho: np.ndarray, coef: np.ndarray, panels: int) -> float:
    """Composite Gauss–Legendre on u = log y over [log x, log 2x] of |S(y)|^2 y."""
    nodes, weights = np.polynomial.legendre.leggauss(QUADRATURE_NODES)
    a, b = math.log(x), math.log(2 * x)
    h = (b - a) / panels
    total = 0.0
    for p in range(panels):
        u = a + h * p + 0.5 * h * (nodes + 1)
        # S(y) = 2 Re sum_gamma y^rho C(rho), y = e^u
        s = 2.0 * (np.exp(np.outer(u, rho)) @ coef).real
        total += 0.5 * h * float(np.sum(weights * s * s * np.exp(u)))
    return total


def integral_I_quadrature(x: float, T: float, delta: float, z: ZeroTable, rtol: float = 5e-3) -> float:
    """Mean square over [x, 2x] of the zero sum weighted by C(rho) = (1-(1+delta)^rho)/rho.

    Panels are refined by doubling until two successive values agree to
    ``rtol``; the finer value is returned.
    """
    if x > 1e8:
        raise DomainError("quadrature is limited to x <= 1e8")
    if not 0 < delta <= 1:
        raise DomainError("needs 0 < delta <= 1")
    if T > z.max_ordinate:
        raise InsufficientDataError(f"T={T} exceeds the table's max ordinate {z.max_ordinate}")
    gammas = z.below(T)
    rho, coef = _zero_coefficients(gammas, delta)
    # one panel per oscillation of the fastest term in u
    panels = max(2, math.ceil(T * math.log(2) / (2 * math.pi)))
    prev = None
    while True:
        if panels * QUADRATURE_NODES * max(gammas.size, 1) > QUADRATURE_MAX_COST:
            raise ScaleRefusal(f"quadrature too expensive at T={T}; try T <= {T / 2:g}")
        val = _gl_integral(x, rho, coef, panels)
        if prev is not None and abs(val - prev) <= rtol * abs(val):
            return val
        prev = val
        panels *= 2
