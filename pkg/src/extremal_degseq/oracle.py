"""Exhaustive ground truth over degree sequences of G(n, m).

Two candidate pools: the threshold graphs (one per isomorphism class, built
from creation sequences) and every graphical sequence (partitions of 2m that
pass Erdős–Gallai).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Iterator

from ._numeric import TAU, compare, is_exact, to_mpf, to_plain
from .functions import FunctionSpec, check_integer_convexity
from .graphs import (DOMINATING, ISOLATED, DegreeSequence, Graph, degree_sequence,
                     havel_hakimi, is_graphical, make_quasi_complete, make_quasi_star,
                     threshold_from_creation_sequence)

THRESHOLD_ONLY = "threshold-only"
ALL_GRAPHICAL = "all-graphical"


def _check_range(n: int, m: int) -> None:
    if n < 1 or not 0 <= m <= comb(n, 2):
        raise ValueError(f"m={m} outside [0, C({n}, 2)]")


def creation_sequences(n: int, m: int) -> Iterator[str]:
    """Creation strings of length ``n`` whose dominating steps add exactly ``m`` edges.

    Step ``t`` (0-based) contributes ``t`` edges when dominating.
    """

    def rec(t, remaining):
        if t == 0:
            if remaining == 0:
                yield ""
            return
        if remaining > t * (t + 1) // 2:
            return
        if remaining >= t:
            for rest in rec(t - 1, remaining - t):
                yield rest + DOMINATING
        for rest in rec(t - 1, remaining):
            yield rest + ISOLATED

    for tail in rec(n - 1, m):
        yield ISOLATED + tail


def enumerate_threshold_graphs(n: int, m: int) -> Iterator[Graph]:
    """One threshold graph per isomorphism class in ``G(n, m)``."""
    _check_range(n, m)
    seen = set()
    for word in creation_sequences(n, m):
        g = threshold_from_creation_sequence(word)
        key = degree_sequence(g).d
        if key not in seen:
            seen.add(key)
            yield g


def enumerate_graphical_sequences(n: int, m: int) -> Iterator[DegreeSequence]:
    """Every non-increasing graphical sequence of length ``n`` summing to ``2m``,
    in decreasing lexicographic order."""
    _check_range(n, m)

    def rec(slots, remaining, cap):
        if slots == 0:
            if remaining == 0:
                yield ()
            return
        for x in range(min(cap, remaining), -1, -1):
            if x * slots < remaining:
                break
            for rest in rec(slots - 1, remaining - x, x):
                yield (x,) + rest

    for d in rec(n, 2 * m, n - 1):
        if is_graphical(d):
            yield DegreeSequence.from_degrees(d)


@dataclass(frozen=True)
class ExtremalReport:
    objective: str
    n: int
    m: int
    mode: str
    oracle: str
    optimum: object
    optimal_sequences: tuple[tuple[int, ...], ...]
    unique: bool
    near_ties: tuple[tuple[tuple[int, ...], object], ...] = ()
    note: str = ""

    def witnesses(self) -> list[Graph]:
        """A realizing graph per optimal sequence (unique up to isomorphism
        when the sequence is a threshold sequence)."""
        return [havel_hakimi(s) for s in self.optimal_sequences]

    def to_dict(self) -> dict:
        return {
            "objective": self.objective, "n": self.n, "m": self.m, "mode": self.mode,
            "oracle": self.oracle, "optimum": to_plain(self.optimum),
            "optimal_sequences": [list(s) for s in self.optimal_sequences],
            "unique": self.unique,
            "near_ties": [{"sequence": list(s), "gap": to_plain(g)} for s, g in self.near_ties],
            "note": self.note,
        }


def _candidates(n, m, oracle):
    if oracle == THRESHOLD_ONLY:
        return [degree_sequence(g).d for g in enumerate_threshold_graphs(n, m)]
    if oracle == ALL_GRAPHICAL:
        return [s.d for s in enumerate_graphical_sequences(n, m)]
    raise ValueError(f"unknown oracle {oracle!r}")


def find_extremal(spec: FunctionSpec, n: int, m: int, mode: str = "max",
                  oracle: str = ALL_GRAPHICAL, tau: float = TAU) -> ExtremalReport:
    """Optimum of ``sum f(d_i)`` over the chosen candidate pool, with the full optimal set.

    The threshold-only pool is valid for maximization when ``f`` is integer
    strictly convex and for minimization when ``-f`` is; this is checked.
    """
    if mode not in ("max", "min"):
        raise ValueError(f"mode must be 'max' or 'min', not {mode!r}")
    _check_range(n, m)
    if oracle == THRESHOLD_ONLY and n >= 3:
        conv = check_integer_convexity(spec, n, tau, negate=(mode == "min"))
        if not conv.ok:
            raise ValueError(f"threshold-only oracle needs {'concavity' if mode == 'min' else 'convexity'}"
                             f" of {spec.dsl()} on 0..{n}")
    table = [spec.value(k) for k in range(n)]
    exact = all(is_exact(v) for v in table)
    if not exact:
        table = [to_mpf(v) for v in table]
    sgn = 1 if mode == "max" else -1
    scored = []
    for d in _candidates(n, m, oracle):
        total = sum((table[x] for x in d), 0 if exact else to_mpf(0))
        scored.append((d, total))
    best = max((v for _, v in scored), key=lambda v: sgn * v)
    optimal, near = [], []
    for d, v in scored:
        cmp = compare(best, v, tau)
        if cmp.sign == 0:
            optimal.append(d)
            if v != best:
                near.append((d, cmp.gap))
    optimal.sort(reverse=True)
    note = ""
    if mode == "max" and m > n - 1:
        note = "outside theorem scope (m > n - 1)"
    return ExtremalReport(spec.dsl(), n, m, mode, oracle, best, tuple(optimal),
                          len(optimal) == 1 and not near, tuple(near), note)


@dataclass(frozen=True)
class Verdict:
    check: str
    status: str
    spec: str
    n: int
    m: int
    expected: tuple[tuple[int, ...], ...] = ()
    found: tuple[tuple[int, ...], ...] = ()
    detail: str = ""
    report: ExtremalReport | None = field(default=None, compare=False)

    @property
    def passed(self) -> bool:
        return self.status == "PASS"

    def to_dict(self) -> dict:
        return {
            "check": self.check, "status": self.status, "spec": self.spec,
            "n": self.n, "m": self.m,
            "expected": [list(s) for s in self.expected],
            "found": [list(s) for s in self.found],
            "optimum": to_plain(self.report.optimum) if self.report else None,
            "detail": self.detail,
        }


def star_tie_predicted(spec: FunctionSpec, tau: float = TAU):
    """Whether ``f(3) = 3 (f(2) - f(1))``; ``None`` for a float near-tie."""
    f1, f2, f3 = (spec.value(k) for k in (1, 2, 3))
    rhs = 3 * (f2 - f1) if is_exact(f1) and is_exact(f2) else 3 * (to_mpf(f2) - to_mpf(f1))
    cmp = compare(f3, rhs, tau)
    if cmp.near_tie:
        return None
    return cmp.sign == 0


def verify_unique_quasi_star(spec: FunctionSpec, n: int, m: int,
                             oracle: str = ALL_GRAPHICAL, tau: float = TAU) -> Verdict:
    """PASS iff the quasi-star sequence is the unique maximizer, or, on the
    predicted tie row (``m = 3`` and ``f(3) = 3(f(2) - f(1))``), the maximizers are
    exactly the star and the triangle."""
    name = "unique-quasi-star"
    if m > n - 1:
        return Verdict(name, "SKIPPED", spec.dsl(), n, m, detail="m > n - 1")
    report = find_extremal(spec, n, m, "max", oracle, tau)
    star = degree_sequence(make_quasi_star(n, m)).d
    expected = {star}
    tie = star_tie_predicted(spec, tau) if m == 3 else False
    detail = ""
    if tie is None:
        return Verdict(name, "INCONCLUSIVE", spec.dsl(), n, m, (star,), report.optimal_sequences,
                       "tie predicate is a float near-tie", report)
    if tie:
        expected.add((2, 2, 2) + (0,) * (n - 3))
        detail = "predicted tie row: star and triangle"
    if report.near_ties:
        return Verdict(name, "INCONCLUSIVE", spec.dsl(), n, m, tuple(sorted(expected, reverse=True)),
                       report.optimal_sequences, "near-tie among maximizers", report)
    status = "PASS" if set(report.optimal_sequences) == expected else "FAIL"
    return Verdict(name, status, spec.dsl(), n, m, tuple(sorted(expected, reverse=True)),
                   report.optimal_sequences, detail, report)


def verify_unique_quasi_complete(spec: FunctionSpec, n: int, m: int,
                                 oracle: str = THRESHOLD_ONLY, tau: float = TAU) -> Verdict:
    """PASS iff the quasi-complete sequence is the unique minimizer."""
    name = "unique-quasi-complete"
    report = find_extremal(spec, n, m, "min", oracle, tau)
    qk = degree_sequence(make_quasi_complete(n, m)).d
    if report.near_ties:
        return Verdict(name, "INCONCLUSIVE", spec.dsl(), n, m, (qk,), report.optimal_sequences,
                       "near-tie among minimizers", report)
    status = "PASS" if report.optimal_sequences == (qk,) else "FAIL"
    return Verdict(name, status, spec.dsl(), n, m, (qk,), report.optimal_sequences, "", report)


def verify_isolated_vertex_lemma(spec: FunctionSpec, n: int, m: int,
                                 oracle: str = ALL_GRAPHICAL, tau: float = TAU) -> Verdict:
    """PASS iff every minimizer has a zero entry; SKIPPED when ``m > C(n-1, 2)``."""
    name = "isolated-vertex"
    if m > comb(n - 1, 2):
        return Verdict(name, "SKIPPED", spec.dsl(), n, m, detail="m > C(n-1, 2): outside lemma scope")
    report = find_extremal(spec, n, m, "min", oracle, tau)
    bad = tuple(s for s in report.optimal_sequences if s[-1] != 0)
    if report.near_ties:
        status, detail = "INCONCLUSIVE", "near-tie among minimizers"
    elif bad:
        status, detail = "FAIL", f"minimizers without isolated vertex: {bad}"
    else:
        status, detail = "PASS", ""
    return Verdict(name, status, spec.dsl(), n, m, (), report.optimal_sequences, detail, report)
