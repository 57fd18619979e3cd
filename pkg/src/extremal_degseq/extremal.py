"""Degree-sum objectives, the Chebyshev bound, exchange local search and the
complement-duality route for minimization."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

from ._numeric import TAU, compare, is_exact, to_mpf
from .functions import FunctionSpec, Hat, check_integer_convexity, make_hat
from .graphs import (DegreeSequence, Graph, chain_exchange, chain_violation,
                     degree_sequence)


def _degrees(d) -> tuple[int, ...]:
    return d.d if isinstance(d, DegreeSequence) else tuple(d)


def _total(values):
    if all(is_exact(v) for v in values):
        return sum(values, 0)
    return sum((to_mpf(v) for v in values), to_mpf(0))


def sigma(spec: FunctionSpec, d) -> object:
    """``sum_i f(d_i)``."""
    return _total([spec.value(x) for x in _degrees(d)])


def sigma_via_conjugate(spec: FunctionSpec, d) -> object:
    """Same sum regrouped by increments: ``sum_{i <= d_1} (f(i) - f(i-1)) * d*_i``."""
    ds = d if isinstance(d, DegreeSequence) else DegreeSequence.from_degrees(d)
    terms = [spec.diff(i) * ds.conjugate[i - 1] for i in range(1, ds.max_degree + 1)]
    return _total(terms)


def chebyshev_bound(spec: FunctionSpec, m: int, d1: int):
    """Upper bound on the objective of any threshold graph with ``m`` edges and top degree ``d1``."""
    if d1 < 2:
        raise ValueError("the bound needs d1 >= 2")
    if m < d1:
        raise ValueError("need m >= d1")
    f1, fd = spec.value(1), spec.value(d1)
    if is_exact(f1) and is_exact(fd):
        return f1 * (d1 + 1) + Fraction(2 * m - d1 - 1, d1 - 1) * (fd - f1)
    f1, fd = to_mpf(f1), to_mpf(fd)
    return f1 * (d1 + 1) + to_mpf(2 * m - d1 - 1) / (d1 - 1) * (fd - f1)


@dataclass(frozen=True)
class ChebyshevCheck:
    lhs: object
    rhs: object
    holds: bool
    equality: bool


def chebyshev_inequality_check(a: Sequence, b: Sequence, tau: float = TAU) -> ChebyshevCheck:
    """``sum a_i b_i <= (1/n) (sum a)(sum b)`` for ``a`` non-decreasing, ``b`` non-increasing."""
    n = len(a)
    if n == 0 or len(b) != n:
        raise ValueError("sequences must be non-empty and of equal length")
    if any(x > y for x, y in zip(a, a[1:])):
        raise ValueError("a must be non-decreasing")
    if any(x < y for x, y in zip(b, b[1:])):
        raise ValueError("b must be non-increasing")
    exact = all(is_exact(x) for x in (*a, *b))
    if exact:
        lhs = sum(x * y for x, y in zip(a, b))
        rhs = Fraction(sum(a) * sum(b), n)
    else:
        a, b = [to_mpf(x) for x in a], [to_mpf(x) for x in b]
        lhs = sum(x * y for x, y in zip(a, b))
        rhs = sum(a) * sum(b) / n
    cmp = compare(lhs, rhs, tau)
    return ChebyshevCheck(lhs, rhs, cmp.sign <= 0, cmp.sign == 0)


@dataclass(frozen=True)
class LocalSearchResult:
    graph: Graph
    trace: tuple[tuple[int, int, int], ...]
    values: tuple
    """Objective before the first move and after each move."""


def local_search_to_threshold(g: Graph, spec: FunctionSpec, check_convexity: bool = True
                              ) -> LocalSearchResult:
    """Apply chain exchanges on the first violating triple until the graph is threshold.

    Each exchange strictly raises the objective when ``spec`` is integer
    strictly convex, so the loop terminates.
    """
    if check_convexity and g.n >= 2:
        conv = check_integer_convexity(spec, max(g.n, 2))
        if not conv.ok:
            raise ValueError(f"{spec.dsl()} is not integer strictly convex up to {g.n}")
    trace, values = [], [sigma(spec, g.degrees)]
    while (triple := chain_violation(g)) is not None:
        g = chain_exchange(g, *triple)
        trace.append(triple)
        values.append(sigma(spec, g.degrees))
        if compare(values[-1], values[-2]).sign <= 0:
            raise AssertionError(f"exchange {triple} did not raise the objective")
    return LocalSearchResult(g, tuple(trace), tuple(values))


@dataclass(frozen=True)
class MinimizationPlan:
    """Reduction of ``min over G(n, m)`` to a maximization on the complement side.

    ``ell`` is the smallest vertex count that can carry ``m`` edges,
    ``nu = ell - 1`` is the reflection level and ``m_bar`` the complement's
    edge count on ``ell`` vertices. ``hat`` is ``None`` when ``nu < 3``.
    """

    n: int
    m: int
    ell: int
    nu: int
    m_bar: int
    hat: Hat | None


def _ell(m: int) -> int:
    ell = 1
    while comb(ell, 2) < m:
        ell += 1
    return ell


def plan_minimization(n: int, m: int, g: FunctionSpec) -> MinimizationPlan:
    if not 0 <= m <= comb(n, 2):
        raise ValueError(f"m={m} outside [0, C({n}, 2)]")
    ell = _ell(m)
    nu = ell - 1
    m_bar = comb(ell, 2) - m
    assert m_bar <= max(ell - 1, 0)
    hat = make_hat(g, nu) if nu >= 3 else None
    return MinimizationPlan(n, m, ell, nu, m_bar, hat)


def minimize_via_complement(n: int, m: int, g: FunctionSpec):
    """Minimum of ``sum g(d_i)`` over ``G(n, m)`` through the reflected maximization.

    The minimizers are complements (on ``ell`` vertices) of the maximizers of
    the hat function with ``m_bar`` edges, padded with isolated vertices.
    Small cases (``nu < 3``) go straight to enumeration.
    """
    from .oracle import ExtremalReport, find_extremal

    plan = plan_minimization(n, m, g)
    if plan.hat is None:
        return find_extremal(g, n, m, "min", "all-graphical")
    reflected = find_extremal(plan.hat, plan.ell, plan.m_bar, "max", "threshold-only")
    top, best = g.value(plan.nu), reflected.optimum
    if is_exact(top) and is_exact(best):
        optimum = plan.ell * top - best
    else:
        optimum = plan.ell * to_mpf(top) - to_mpf(best)
    minimizers = tuple(sorted((DegreeSequence.from_degrees(s).complement().padded(n).d
                               for s in reflected.optimal_sequences), reverse=True))
    return ExtremalReport(
        objective=g.dsl(), n=n, m=m, mode="min", oracle="complement-duality",
        optimum=optimum, optimal_sequences=minimizers, unique=reflected.unique,
        near_ties=reflected.near_ties,
    )


def duality_identity(g: FunctionSpec, hat: Hat, d) -> tuple:
    """Both sides of ``sum g(d_i) = ell * g(nu) - sum hat(nu - d_i)`` on ``ell = nu + 1`` vertices."""
    degs = _degrees(d)
    nu = hat.nu
    lhs = sigma(g, degs)
    top = g.value(nu)
    reflected = sigma(hat, [nu - x for x in degs])
    if is_exact(top) and is_exact(reflected):
        rhs = len(degs) * top - reflected
    else:
        rhs = len(degs) * to_mpf(top) - to_mpf(reflected)
    return lhs, rhs


def quasi_star_value(spec: FunctionSpec, m: int):
    """Objective of the star with ``m`` leaves: ``m f(1) + f(m)``."""
    return _total([spec.value(1)] * m + [spec.value(m)])


def sigma_of_graph(spec: FunctionSpec, g: Graph):
    return sigma(spec, degree_sequence(g))
