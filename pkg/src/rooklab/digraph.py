"""Finite digraphs and the structural checks run against them.

A :class:`Digraph` is immutable once built.  The checks return plain tuples
``(ok, witness)`` so a failure always comes with something a caller can
re-verify independently.
"""

from __future__ import annotations

import heapq
from typing import Iterable, NamedTuple, Optional, Sequence

__all__ = [
    "Digraph",
    "TriangleWitness",
    "ClawWitness",
    "from_arcs",
    "is_oriented",
    "induced_subdigraph",
    "find_directed_triangle",
    "find_claw",
    "is_acyclic",
    "is_induced_directed_4cycle",
]


class TriangleWitness(NamedTuple):
    u: int
    v: int
    w: int


class ClawWitness(NamedTuple):
    center: int
    leaves: tuple[int, int, int]


class Digraph:
    """Digraph on vertices ``0..n-1`` with a set of arcs.

    Opposite arc pairs are allowed here so that non-oriented inputs can be
    diagnosed by :func:`is_oriented`.  ``origin`` records, for induced
    subdigraphs, which vertex of the parent each new vertex came from.
    """

    __slots__ = ("n", "_arcs", "_out", "_in", "_out_set", "_in_set", "origin")

    def __init__(self, n: int, arcs: Iterable[tuple[int, int]] = (), origin: Optional[Sequence[int]] = None):
        if n < 0:
            raise ValueError(f"vertex count must be >= 0, got {n}")
        out_set: list[set[int]] = [set() for _ in range(n)]
        in_set: list[set[int]] = [set() for _ in range(n)]
        for u, v in arcs:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"arc ({u},{v}) has an endpoint outside [0,{n})")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            out_set[u].add(v)
            in_set[v].add(u)
        self.n = n
        self._out_set = [frozenset(s) for s in out_set]
        self._in_set = [frozenset(s) for s in in_set]
        self._out = [tuple(sorted(s)) for s in out_set]
        self._in = [tuple(sorted(s)) for s in in_set]
        self._arcs = tuple((u, v) for u in range(n) for v in self._out[u])
        if origin is not None:
            origin = tuple(origin)
            if len(origin) != n:
                raise ValueError("origin must list one parent vertex per vertex")
        self.origin = origin

    @property
    def arcs(self) -> tuple[tuple[int, int], ...]:
        """All arcs, sorted lexicographically."""
        return self._arcs

    @property
    def num_arcs(self) -> int:
        return len(self._arcs)

    def out_neighbors(self, v: int) -> tuple[int, ...]:
        return self._out[v]

    def in_neighbors(self, v: int) -> tuple[int, ...]:
        return self._in[v]

    def out_set(self, v: int) -> frozenset[int]:
        return self._out_set[v]

    def in_set(self, v: int) -> frozenset[int]:
        return self._in_set[v]

    def neighbors(self, v: int) -> frozenset[int]:
        """Neighbors of ``v`` in the underlying undirected graph."""
        return self._out_set[v] | self._in_set[v]

    def has_arc(self, u: int, v: int) -> bool:
        return v in self._out_set[u]

    def degree(self, v: int) -> int:
        return len(self._out[v]) + len(self._in[v])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.n == other.n and self._arcs == other._arcs

    def __hash__(self) -> int:
        return hash((self.n, self._arcs))

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, m={self.num_arcs})"


def from_arcs(n: int, arcs: Iterable[tuple[int, int]]) -> Digraph:
    return Digraph(n, arcs)


def is_oriented(d: Digraph) -> tuple[bool, Optional[tuple[int, int]]]:
    """Check that no pair of opposite arcs exists; the witness is ``(u, v)`` with ``u < v``."""
    for u, v in d.arcs:
        if u < v and d.has_arc(v, u):
            return False, (u, v)
    return True, None


def induced_subdigraph(d: Digraph, vertices: Iterable[int]) -> Digraph:
    """Subdigraph induced on ``vertices``, reindexed in increasing order of the old ids.

    ``result.origin[i]`` is the id in ``d`` of new vertex ``i``.
    """
    keep = sorted(set(vertices))
    for v in keep:
        if not 0 <= v < d.n:
            raise ValueError(f"vertex {v} not in digraph on {d.n} vertices")
    index = {v: i for i, v in enumerate(keep)}
    arcs = [(index[u], index[v]) for u in keep for v in d.out_neighbors(u) if v in index]
    return Digraph(len(keep), arcs, origin=keep)


def find_directed_triangle(d: Digraph) -> Optional[TriangleWitness]:
    """First directed 3-cycle ``u -> v -> w -> u`` in lexicographic arc order, if any."""
    for u, v in d.arcs:
        common = d.out_set(v) & d.in_set(u)
        if common:
            return TriangleWitness(u, v, min(common))
    return None


def find_claw(d: Digraph) -> Optional[ClawWitness]:
    """First induced ``K_{1,3}`` of the underlying graph, ignoring arc directions."""
    nbr = [d.neighbors(v) for v in range(d.n)]
    for center in range(d.n):
        around = sorted(nbr[center])
        for idx, x in enumerate(around):
            for y in around[idx + 1:]:
                if y in nbr[x]:
                    continue
                rest = [z for z in nbr[center] if z > y and z not in nbr[x] and z not in nbr[y]]
                if rest:
                    return ClawWitness(center, (x, y, min(rest)))
    return None


def is_acyclic(d: Digraph) -> tuple[bool, list[int]]:
    """Return ``(True, topological_order)`` or ``(False, cycle)``.

    The order is the lexicographically smallest one.  A cycle is a vertex list
    ``[v0, ..., vk]`` with arcs ``v_i -> v_{i+1}`` and ``vk -> v0``.
    """
    indeg = [len(d.in_neighbors(v)) for v in range(d.n)]
    heap = [v for v in range(d.n) if indeg[v] == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        u = heapq.heappop(heap)
        order.append(u)
        for v in d.out_neighbors(u):
            indeg[v] -= 1
            if indeg[v] == 0:
                heapq.heappush(heap, v)
    if len(order) == d.n:
        return True, order
    # Every leftover vertex keeps an in-neighbor among the leftovers; walking
    # backwards must revisit a vertex.
    placed = set(order)
    start = min(v for v in range(d.n) if v not in placed)
    seen: dict[int, int] = {}
    walk = []
    v = start
    while v not in seen:
        seen[v] = len(walk)
        walk.append(v)
        v = min(p for p in d.in_neighbors(v) if p not in placed)
    back = walk[seen[v]:]
    back.reverse()
    return False, back


def is_induced_directed_4cycle(d: Digraph, quad: Sequence[int]) -> bool:
    """True iff ``quad`` induces exactly one directed cycle through all four vertices."""
    if len(quad) != 4 or len(set(quad)) != 4:
        raise ValueError(f"need four distinct vertices, got {tuple(quad)}")
    succ = {}
    count = 0
    for u in quad:
        for v in quad:
            if u != v and d.has_arc(u, v):
                count += 1
                succ[u] = v
    if count != 4 or len(succ) != 4:
        return False
    v = quad[0]
    visited = set()
    for _ in range(4):
        visited.add(v)
        v = succ[v]
    return v == quad[0] and len(visited) == 4
