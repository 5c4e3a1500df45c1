"""Bit primitives and the orientation of the N x N rook graph.

Cells are 1-based pairs ``(a, b)`` with ``1 <= a, b <= N``.  Bits are read off
the raw coordinate value, so coordinate 1 has bit 0 set.  Vertex ids are
row-major: ``(a, b) -> (a - 1) * N + (b - 1)``.

Two cells in the same row ``a`` are oriented by looking at the lowest bit
``i`` where their column coordinates differ: ``(a, b) -> (a, d)`` exactly when
``b`` and ``a`` agree at bit ``i``.  Two cells in the same column ``b`` use the
lowest bit where their row coordinates differ, with the opposite test:
``(a, b) -> (c, b)`` exactly when ``b`` and ``a`` disagree at that bit.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator, NamedTuple

from rooklab.digraph import Digraph, is_induced_directed_4cycle

__all__ = [
    "CellCoord",
    "Direction",
    "RookDigraph",
    "bit",
    "lsb_diff",
    "two_adic_valuation",
    "orient_row",
    "orient_col",
    "build_rook_digraph",
    "generalized_square_predicate",
    "cell_to_vertex",
    "iter_squares",
    "square_cycle_failures",
    "vertex_to_cell",
]


class CellCoord(NamedTuple):
    a: int
    b: int


class Direction(enum.Enum):
    FORWARD = 1
    BACKWARD = -1

    def reversed(self) -> Direction:
        return Direction.BACKWARD if self is Direction.FORWARD else Direction.FORWARD


def bit(n: int, i: int) -> int:
    """Coefficient of ``2**i`` in the binary expansion of ``n``."""
    if n < 0 or i < 0:
        raise ValueError(f"bit() needs n >= 0 and i >= 0, got n={n}, i={i}")
    return (n >> i) & 1


def lsb_diff(x: int, y: int) -> int:
    """Lowest bit position at which ``x`` and ``y`` differ."""
    if x == y:
        raise ValueError(f"lsb_diff undefined for equal inputs ({x})")
    if x < 0 or y < 0:
        raise ValueError("lsb_diff needs nonnegative inputs")
    z = x ^ y
    return (z & -z).bit_length() - 1


def two_adic_valuation(m: int) -> int:
    """Largest ``j`` with ``2**j`` dividing ``m`` (``m >= 1``)."""
    if m < 1:
        raise ValueError(f"2-adic valuation needs m >= 1, got {m}")
    return (m & -m).bit_length() - 1


def orient_row(a: int, b: int, d: int) -> Direction:
    """Direction of the edge between ``(a, b)`` and ``(a, d)``.

    FORWARD means the arc ``(a, b) -> (a, d)``.
    """
    i = lsb_diff(b, d)
    return Direction.FORWARD if bit(b, i) == bit(a, i) else Direction.BACKWARD


def orient_col(b: int, a: int, c: int) -> Direction:
    """Direction of the edge between ``(a, b)`` and ``(c, b)``.

    FORWARD means the arc ``(a, b) -> (c, b)``.
    """
    i = lsb_diff(a, c)
    return Direction.FORWARD if bit(b, i) != bit(a, i) else Direction.BACKWARD


def cell_to_vertex(a: int, b: int, n: int) -> int:
    if not (1 <= a <= n and 1 <= b <= n):
        raise ValueError(f"cell ({a},{b}) outside [1,{n}]^2")
    return (a - 1) * n + (b - 1)


def vertex_to_cell(v: int, n: int) -> CellCoord:
    if not 0 <= v < n * n:
        raise ValueError(f"vertex {v} outside [0,{n * n})")
    q, r = divmod(v, n)
    return CellCoord(q + 1, r + 1)


@dataclass(frozen=True)
class RookDigraph:
    """The oriented rook graph on an ``n x n`` board."""

    n: int
    graph: Digraph

    def vertex(self, a: int, b: int) -> int:
        return cell_to_vertex(a, b, self.n)

    def coord_of(self, v: int) -> CellCoord:
        return vertex_to_cell(v, self.n)

    def label(self, v: int) -> str:
        a, b = self.coord_of(v)
        return f"({a},{b})"

    def square_vertices(self, a: int, c: int, b: int, d: int) -> tuple[int, int, int, int]:
        """Ids of ``(a,b), (a,d), (c,d), (c,b)`` in cyclic order."""
        return (self.vertex(a, b), self.vertex(a, d), self.vertex(c, d), self.vertex(c, b))


def build_rook_digraph(n: int) -> RookDigraph:
    """Construct the oriented rook graph ``D_n``; it has ``n*n*(n-1)`` arcs."""
    if n < 1:
        raise ValueError(f"board size must be >= 1, got {n}")
    arcs = []
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            u = (a - 1) * n + (b - 1)
            # each unordered pair once: partner has larger column / larger row
            for d in range(b + 1, n + 1):
                v = (a - 1) * n + (d - 1)
                if orient_row(a, b, d) is Direction.FORWARD:
                    arcs.append((u, v))
                else:
                    arcs.append((v, u))
            for c in range(a + 1, n + 1):
                v = (c - 1) * n + (b - 1)
                if orient_col(b, a, c) is Direction.FORWARD:
                    arcs.append((u, v))
                else:
                    arcs.append((v, u))
    return RookDigraph(n, Digraph(n * n, arcs))


def generalized_square_predicate(a: int, c: int, b: int, d: int) -> bool:
    """True when the row pair ``a, c`` and column pair ``b, d`` first differ at the same bit.

    Equivalent to equal dyadic distances ``|a - c|`` and ``|b - d|``; implied by
    ``|a - c| == |b - d|``.
    """
    return lsb_diff(a, c) == lsb_diff(b, d)


def iter_squares(n: int, dyadic: bool = False) -> Iterator[tuple[int, int, int, int]]:
    """Quadruples ``(a, c, b, d)`` with ``a < c`` and ``b < d`` in ``[1, n]``.

    With ``dyadic=False`` these are the ones with ``c - a == d - b``; with
    ``dyadic=True``, all those satisfying :func:`generalized_square_predicate`.
    Swapping ``a, c`` or ``b, d`` names the same four cells, so the ordered
    choice loses nothing.
    """
    for a in range(1, n + 1):
        for c in range(a + 1, n + 1):
            if dyadic:
                i = lsb_diff(a, c)
                for b in range(1, n + 1):
                    for d in range(b + 1, n + 1):
                        if lsb_diff(b, d) == i:
                            yield a, c, b, d
            else:
                t = c - a
                for b in range(1, n - t + 1):
                    yield a, c, b, b + t


def square_cycle_failures(rook: RookDigraph, dyadic: bool = False) -> list[tuple[int, int, int, int]]:
    """Quadruples from :func:`iter_squares` whose cells do not induce a directed 4-cycle."""
    g = rook.graph
    return [q for q in iter_squares(rook.n, dyadic) if not is_induced_directed_4cycle(g, rook.square_vertices(*q))]
