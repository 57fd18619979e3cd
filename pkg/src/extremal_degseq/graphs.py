"""Small labeled graphs as bit-rows, extremal constructions, degree sequences.

Vertices are ``0..n-1``. Row ``i`` of a :class:`Graph` is an integer whose
bit ``j`` is set when ``i`` and ``j`` are adjacent.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from math import comb, isqrt
from typing import Iterable, Iterator, NamedTuple, Sequence

import numpy as np

MAX_VERTICES = 64

ISOLATED = "i"
DOMINATING = "d"


@dataclass(frozen=True)
class Graph:
    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise ValueError(f"n={self.n} outside [0, {MAX_VERTICES}]")
        if len(self.rows) != self.n:
            raise ValueError("need exactly one row per vertex")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.rows):
            if row & ~full or row >> i & 1:
                raise ValueError(f"row {i} has a self-loop or out-of-range bit")
            for j in _bits(row):
                if not self.rows[j] >> i & 1:
                    raise ValueError(f"adjacency not symmetric at ({i}, {j})")

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> Graph:
        full = (1 << n) - 1
        return cls(n, tuple(full & ~(1 << i) for i in range(n)))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def from_matrix(cls, adjacency) -> Graph:
        a = np.asarray(adjacency, dtype=bool)
        rows = tuple(sum(1 << int(j) for j in np.flatnonzero(r)) for r in a)
        return cls(len(rows), rows)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        """Vertex-labeled degree vector."""
        return tuple(row.bit_count() for row in self.rows)

    @cached_property
    def m(self) -> int:
        return sum(self.degrees) // 2

    def adjacent(self, i: int, j: int) -> bool:
        return bool(self.rows[i] >> j & 1)

    def neighbors(self, i: int) -> list[int]:
        return list(_bits(self.rows[i]))

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in _bits(self.rows[i]) if i < j]

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=bool)
        for i, j in self.edges():
            a[i, j] = a[j, i] = True
        return a

    def __str__(self) -> str:
        lines = [f"{i}: {' '.join(map(str, self.neighbors(i)))}".rstrip() for i in range(self.n)]
        return "\n".join(lines)


def _bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


@dataclass(frozen=True)
class DegreeSequence:
    """Non-increasing degree sequence with its conjugate.

    ``conjugate[i - 1]`` counts the entries of ``d`` that are at least ``i``,
    for ``i = 1..n``.
    """

    d: tuple[int, ...]
    conjugate: tuple[int, ...]

    @classmethod
    def from_degrees(cls, degrees: Iterable[int]) -> DegreeSequence:
        d = tuple(sorted((int(x) for x in degrees), reverse=True))
        if d and d[-1] < 0:
            raise ValueError("degrees must be non-negative")
        return cls(d, conjugate_of(d))

    @property
    def n(self) -> int:
        return len(self.d)

    @property
    def m(self) -> int:
        return sum(self.d) // 2

    @property
    def max_degree(self) -> int:
        return self.d[0] if self.d else 0

    @property
    def min_degree(self) -> int:
        return self.d[-1] if self.d else 0

    def complement(self) -> DegreeSequence:
        """Degree sequence of the complement graph on the same ``n`` vertices."""
        return DegreeSequence.from_degrees(self.n - 1 - x for x in self.d)

    def padded(self, n: int) -> DegreeSequence:
        if n < self.n:
            raise ValueError("cannot pad to fewer vertices")
        return DegreeSequence.from_degrees(self.d + (0,) * (n - self.n))


def conjugate_of(d: Sequence[int]) -> tuple[int, ...]:
    return tuple(sum(1 for x in d if x >= i) for i in range(1, len(d) + 1))


def degree_sequence(g: Graph) -> DegreeSequence:
    return DegreeSequence.from_degrees(g.degrees)


class QuasiDecomposition(NamedTuple):
    q: int
    r: int


def quasi_decomposition(m: int) -> QuasiDecomposition:
    """The unique ``(q, r)`` with ``m = C(q, 2) + r`` and ``0 <= r <= q - 1``."""
    if m < 0:
        raise ValueError(f"m={m} is negative")
    q = (1 + isqrt(1 + 8 * m)) // 2
    while comb(q, 2) > m:
        q -= 1
    while comb(q + 1, 2) <= m:
        q += 1
    return QuasiDecomposition(q, m - comb(q, 2))


def _check_edge_count(n: int, m: int) -> None:
    if n < 0 or not 0 <= m <= comb(n, 2):
        raise ValueError(f"m={m} outside [0, C({n}, 2)]")


def make_quasi_complete(n: int, m: int) -> Graph:
    """Clique on the first q vertices, vertex q joined to the first r, rest isolated."""
    _check_edge_count(n, m)
    q, r = quasi_decomposition(m)
    edges = list(combinations(range(q), 2))
    edges += [(q, i) for i in range(r)]
    return Graph.from_edges(n, edges)


def make_quasi_star(n: int, m: int) -> Graph:
    _check_edge_count(n, m)
    return complement(make_quasi_complete(n, comb(n, 2) - m))


def quasi_complete_degrees(n: int, m: int) -> DegreeSequence:
    """Degree sequence of the quasi-complete graph, computed without building it."""
    _check_edge_count(n, m)
    q, r = quasi_decomposition(m)
    if q > n:  # only when m = 0 and n = 0
        return DegreeSequence((), ())
    d = [q] * r + [q - 1] * (q - r) + ([r] if q < n else []) + [0] * max(n - q - 1, 0)
    return DegreeSequence.from_degrees(d)


def quasi_star_degrees(n: int, m: int) -> DegreeSequence:
    return quasi_complete_degrees(n, comb(n, 2) - m).complement()


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full & ~row & ~(1 << i) for i, row in enumerate(g.rows)))


def chain_violation(g: Graph) -> tuple[int, int, int] | None:
    """First triple ``(i, j, k)`` with ``d_i >= d_j``, ``j~k`` and ``i`` not adjacent to ``k``.

    Candidates ``i`` are scanned by decreasing degree (ties by label), then
    ``j`` and ``k`` by label. Returns ``None`` for threshold graphs.
    """
    deg = g.degrees
    for i in sorted(range(g.n), key=lambda v: (-deg[v], v)):
        blocked = g.rows[i] | 1 << i
        for j in range(g.n):
            if j == i or deg[j] > deg[i]:
                continue
            cand = g.rows[j] & ~blocked
            if cand:
                return i, j, (cand & -cand).bit_length() - 1
    return None


def is_threshold(g: Graph) -> bool:
    return chain_violation(g) is None


def chain_exchange(g: Graph, i: int, j: int, k: int) -> Graph:
    """Swap edge ``jk`` for ``ik``; ``d_i`` grows by one and ``d_j`` shrinks by one."""
    if len({i, j, k}) != 3:
        raise ValueError("i, j, k must be distinct")
    if g.degrees[i] < g.degrees[j] or not g.adjacent(j, k) or g.adjacent(i, k):
        raise ValueError(f"({i}, {j}, {k}) does not violate the chain property")
    rows = list(g.rows)
    rows[j] &= ~(1 << k)
    rows[k] &= ~(1 << j)
    rows[i] |= 1 << k
    rows[k] |= 1 << i
    return Graph(g.n, tuple(rows))


def threshold_from_creation_sequence(bits: Iterable) -> Graph:
    """Build a threshold graph by adding one vertex per symbol.

    Symbols are ``"i"``/``"d"`` (or falsy/truthy). The first symbol only
    creates the starting vertex; each later ``"d"`` joins the new vertex to
    every earlier one.
    """
    symbols = list(bits)
    if not symbols:
        raise ValueError("creation sequence must be non-empty")
    rows = [0] * len(symbols)
    for t, s in enumerate(symbols[1:], start=1):
        if _is_dominating(s):
            rows[t] = (1 << t) - 1
            for u in range(t):
                rows[u] |= 1 << t
    return Graph(len(symbols), tuple(rows))


def _is_dominating(s) -> bool:
    if isinstance(s, str):
        if s not in (ISOLATED, DOMINATING):
            raise ValueError(f"unknown creation symbol {s!r}")
        return s == DOMINATING
    return bool(s)


def is_graphical(seq: Sequence[int]) -> bool:
    """Erdős–Gallai test."""
    d = sorted(seq, reverse=True)
    n = len(d)
    if any(x < 0 or x > n - 1 for x in d) or sum(d) % 2:
        return False
    lhs = 0
    for k in range(1, n + 1):
        lhs += d[k - 1]
        rhs = k * (k - 1) + sum(min(x, k) for x in d[k:])
        if lhs > rhs:
            return False
    return True


def havel_hakimi(seq: Sequence[int]) -> Graph:
    """Realize a graphical sequence; vertex ``i`` gets degree ``seq[i]``."""
    n = len(seq)
    residual = list(seq)
    edges = []
    for _ in range(n):
        v = max(range(n), key=lambda u: (residual[u], -u))
        need = residual[v]
        if need == 0:
            break
        residual[v] = 0
        others = sorted((u for u in range(n) if u != v and residual[u] > 0),
                        key=lambda u: (-residual[u], u))
        if len(others) < need:
            raise ValueError(f"{tuple(seq)} is not graphical")
        for u in others[:need]:
            residual[u] -= 1
            edges.append((v, u))
    if any(residual):
        raise ValueError(f"{tuple(seq)} is not graphical")
    return Graph.from_edges(n, edges)


def has_triangle(g: Graph) -> bool:
    return any(g.rows[i] & g.rows[j] for i, j in g.edges())


def all_graphs(n: int) -> Iterator[Graph]:
    """Every labeled graph on ``n`` vertices (``2**C(n, 2)`` of them)."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        rows = [0] * n
        for b in _bits(mask):
            u, v = pairs[b]
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        yield Graph(n, tuple(rows))
