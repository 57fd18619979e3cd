"""Where the star loses for exponents just above 1, plus grid scans of the
inequalities behind the power-function membership proof.

On the instance ``n = m + 1`` with ``m = C(q, 2)``, the star scores
``m + m^(1+eps)`` and ``K_q`` plus isolated vertices scores
``q (q-1)^(1+eps)``. Their comparison reduces to the sign of

    margin(eps) = (q-1)^eps * (2 - (q/2)^eps) - 1,

which is strictly concave on (0, 1], zero at 0 and negative at 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from math import comb
from typing import Callable, Sequence

import numpy as np

from ._numeric import to_mpf
from .extremal import sigma
from .functions import Power
from .graphs import quasi_complete_degrees, quasi_star_degrees

ROOT_TOL = 1e-12
MAX_ITER = 200


class AnalysisError(RuntimeError):
    pass


def counterexample_margin(q: int, eps: float) -> float:
    if q < 4 or not 0 <= eps <= 1:
        raise ValueError("need q >= 4 and 0 <= eps <= 1")
    return (q - 1) ** eps * (2 - (q / 2) ** eps) - 1


def margin_slope(q: int, eps: float) -> float:
    """Derivative of :func:`counterexample_margin` in ``eps``."""
    a, b = math.log(q - 1), math.log(q / 2)
    return 2 * a * (q - 1) ** eps - (a + b) * (q - 1) ** eps * (q / 2) ** eps


def peak_upper_bound(q: int) -> float:
    """``ln(ln 9 / ln 6) / ln(q/2)``, an a-priori upper bound on the margin's argmax."""
    return math.log(math.log(9) / math.log(6)) / math.log(q / 2)


def bisect(fn: Callable[[float], float], lo: float, hi: float,
           tol: float = ROOT_TOL, max_iter: int = MAX_ITER) -> float:
    """Sign-change bisection; ``fn(lo)`` and ``fn(hi)`` must not share a strict sign."""
    flo, fhi = fn(lo), fn(hi)
    if flo == 0:
        return lo
    if fhi == 0:
        return hi
    if (flo > 0) == (fhi > 0):
        raise AnalysisError(f"no sign change on [{lo}, {hi}]: f(lo)={flo}, f(hi)={fhi}")
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        if hi - lo <= tol:
            return mid
        fmid = fn(mid)
        if fmid == 0:
            return mid
        if (fmid > 0) == (flo > 0):
            lo, flo = mid, fmid
        else:
            hi = mid
    return 0.5 * (lo + hi)


@dataclass(frozen=True)
class Sample:
    eps: float
    star_value: float
    clique_value: float

    @property
    def clique_wins(self) -> bool:
        return self.clique_value > self.star_value


@dataclass(frozen=True)
class EpsilonWindow:
    """``(0, root)`` is the set of ``eps`` where the clique beats the star."""

    q: int
    m_q: int
    peak: float
    root: float
    peak_bound: float
    samples: tuple[Sample, ...]

    @property
    def peak_margin(self) -> float:
        return counterexample_margin(self.q, self.peak)

    def contains(self, eps: float) -> bool:
        return 0 < eps < self.root


def _pair_values(q: int, eps: float) -> tuple[float, float]:
    m = comb(q, 2)
    f = Power(to_mpf(1) + to_mpf(eps))
    star = sigma(f, quasi_star_degrees(m + 1, m))
    clique = sigma(f, quasi_complete_degrees(m + 1, m))
    return float(star), float(clique)


def find_epsilon_window(q: int, tol: float = ROOT_TOL) -> EpsilonWindow:
    if q < 4:
        raise ValueError("q must be at least 4")
    bound = peak_upper_bound(q)
    try:
        peak = bisect(lambda e: margin_slope(q, e), 0.0, bound, tol)
        if counterexample_margin(q, peak) <= 0:
            raise AnalysisError(f"margin not positive at its peak {peak}")
        root = bisect(lambda e: counterexample_margin(q, e), peak, 1.0, tol)
    except AnalysisError as exc:
        grid = [(e, counterexample_margin(q, e)) for e in np.linspace(0, 1, 11)]
        raise AnalysisError(f"q={q}: {exc}; margin samples {grid}") from exc
    samples = []
    for frac in (0.25, 0.5, 0.75):
        eps = frac * root
        star, clique = _pair_values(q, eps)
        samples.append(Sample(eps, star, clique))
        if not clique > star:
            raise AnalysisError(f"q={q}, eps={eps}: star {star} >= clique {clique}")
    return EpsilonWindow(q, comb(q, 2), peak, root, bound, tuple(samples))


@dataclass(frozen=True)
class CounterexampleRecord:
    q: int
    eps: float
    star_value: float
    clique_value: float
    margin: float

    @property
    def clique_wins(self) -> bool:
        return self.clique_value > self.star_value


def verify_counterexample(q: int, eps: float) -> CounterexampleRecord:
    """Closed-form comparison ``m + m^(1+eps)`` against ``q (q-1)^(1+eps)``."""
    if q < 4 or not 0 < eps < 1:
        raise ValueError("need q >= 4 and 0 < eps < 1")
    m = comb(q, 2)
    star = m + m ** (1 + eps)
    clique = q * (q - 1) ** (1 + eps)
    return CounterexampleRecord(q, eps, star, clique, counterexample_margin(q, eps))


# ---------------------------------------------------------------------------
# grid scans for power functions with exponent >= 2

DEFAULT_BETAS = np.round(np.arange(2.0, 6.0 + 1e-9, 0.1), 10)
DEFAULT_XS = np.arange(3.0, 100.0 + 1e-9, 0.5)
GRID_TOL = 1e-12


@dataclass(frozen=True)
class GridVerdict:
    holds: bool
    worst: float
    worst_at: tuple[float, float]
    equality_points: tuple[tuple[float, float], ...] = ()


def derivative_ratio(beta, x):
    """``(1 - 1/x)^(beta-1) + ((beta-1)/beta)(2/x)``; at most 1 for ``x >= 3``, ``beta >= 2``."""
    beta = np.asarray(beta, dtype=float)
    x = np.asarray(x, dtype=float)
    return (1 - 1 / x) ** (beta - 1) + (beta - 1) / beta * (2 / x)


def check_derivative_inequality(betas: Sequence[float] = DEFAULT_BETAS,
                                xs: Sequence[float] = DEFAULT_XS,
                                tol: float = GRID_TOL) -> GridVerdict:
    b, x = np.meshgrid(np.asarray(betas, float), np.asarray(xs, float), indexing="ij")
    if (b < 2).any() or (x < 3).any():
        raise ValueError("grid must satisfy beta >= 2 and x >= 3")
    vals = derivative_ratio(b, x)
    i = np.unravel_index(np.argmax(vals), vals.shape)
    eq = np.argwhere(np.abs(vals - 1) <= tol)
    return GridVerdict(bool((vals <= 1 + tol).all()), float(vals[i]),
                       (float(b[i]), float(x[i])),
                       tuple((float(b[p]), float(x[p])) for p in map(tuple, eq)))


def power_tie_margin(beta: float) -> float:
    """``3^(beta-1) + 1 - 2^beta``: a third of ``f(3) - 3(f(2) - f(1))`` for ``f = x^beta``."""
    if beta <= 0:
        raise ValueError("beta must be positive")
    return 3 ** (beta - 1) + 1 - 2 ** beta


def power_star_gap(beta, x):
    """``x^beta - (x-1)^beta - 2 x^(beta-1) + 1``; non-negative and non-decreasing for x >= 3."""
    beta = np.asarray(beta, dtype=float)
    x = np.asarray(x, dtype=float)
    return x ** beta - (x - 1) ** beta - 2 * x ** (beta - 1) + 1


def check_power_star_gap(beta: float, xs: Sequence[float] = DEFAULT_XS,
                         rtol: float = GRID_TOL) -> GridVerdict:
    """Non-negativity and monotonicity of :func:`power_star_gap` along ``xs``."""
    x = np.asarray(xs, dtype=float)
    if beta < 2 or (x < 3).any() or (np.diff(x) <= 0).any():
        raise ValueError("need beta >= 2 and an increasing grid with x >= 3")
    vals = power_star_gap(beta, x)
    slack = rtol * np.maximum(1.0, x ** beta)
    nonneg = vals >= -slack
    monotone = np.diff(vals) >= -slack[1:]
    i = int(np.argmin(vals))
    return GridVerdict(bool(nonneg.all() and monotone.all()), float(vals[i]), (beta, float(x[i])))
