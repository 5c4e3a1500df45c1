"""Grid colorings and monochromatic axis-parallel squares.

A square ``(x, y, t)`` is the four points ``(x, y), (x+t, y), (x, y+t),
(x+t, y+t)`` with ``x`` a column and ``y`` a row, all 1-based.  Board cell
``(a, b)`` (row ``a``, column ``b``) is the point ``(x, y) = (b, a)``, and it is
also vertex ``(a-1)*N + (b-1)`` of the oriented rook graph, so a grid coloring
and a vertex coloring are the same data read in row-major order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np

from rooklab.dicolor import Coloring, SearchBudgetExceeded

__all__ = [
    "GridColoring",
    "SquareWitness",
    "find_monochromatic_square",
    "verify_square_witness",
    "square_free_search",
    "grid_to_vertex_coloring",
    "vertex_to_grid_coloring",
    "square_vertices",
]


class SquareWitness(NamedTuple):
    x: int
    y: int
    t: int


@dataclass(frozen=True, eq=False)
class GridColoring:
    """``cells[a-1, b-1]`` is the color of row ``a``, column ``b``."""

    n: int
    k: int
    cells: np.ndarray

    def __post_init__(self):
        cells = np.array(self.cells, dtype=np.int64)
        if cells.shape != (self.n, self.n):
            raise ValueError(f"cells must have shape ({self.n}, {self.n}), got {cells.shape}")
        if cells.size and (cells.min() < 0 or cells.max() >= self.k):
            raise ValueError(f"colors must lie in [0, {self.k})")
        cells.setflags(write=False)
        object.__setattr__(self, "cells", cells)

    def at(self, x: int, y: int) -> int:
        """Color of the point in column ``x``, row ``y``."""
        return int(self.cells[y - 1, x - 1])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GridColoring):
            return NotImplemented
        return self.n == other.n and self.k == other.k and np.array_equal(self.cells, other.cells)


def find_monochromatic_square(g: GridColoring) -> Optional[SquareWitness]:
    """First monochromatic square, scanning ``x``, then ``y``, then ``t``."""
    c = g.cells
    n = g.n
    for x in range(1, n):
        for y in range(1, n):
            base = c[y - 1, x - 1]
            for t in range(1, n - max(x, y) + 1):
                if c[y - 1, x - 1 + t] == base and c[y - 1 + t, x - 1] == base and c[y - 1 + t, x - 1 + t] == base:
                    return SquareWitness(x, y, t)
    return None


def verify_square_witness(g: GridColoring, w: SquareWitness) -> bool:
    x, y, t = w
    if t < 1 or x < 1 or y < 1 or x + t > g.n or y + t > g.n:
        return False
    color = g.at(x, y)
    return g.at(x + t, y) == color and g.at(x, y + t) == color and g.at(x + t, y + t) == color


def square_vertices(w: SquareWitness, n: int) -> tuple[int, int, int, int]:
    """Vertex ids of the square's corners, in cyclic order around it."""
    x, y, t = w
    a, c, b, d = y, y + t, x, x + t
    return tuple((r - 1) * n + (s - 1) for r, s in ((a, b), (a, d), (c, d), (c, b)))


def square_free_search(n: int, k: int, budget: int = 10_000_000) -> Optional[GridColoring]:
    """A ``k``-coloring of the ``n x n`` grid without monochromatic squares.

    Cells are filled row-major.  A square is checked when its last corner (the
    bottom-right one) is placed.  Colors are introduced in index order, which
    only removes relabellings.  Returns ``None`` when the search space is
    exhausted; raises :class:`SearchBudgetExceeded` after ``budget``
    assignments.
    """
    if n < 0 or k < 0:
        raise ValueError("n and k must be nonnegative")
    if n == 0:
        return GridColoring(0, k, np.zeros((0, 0), dtype=np.int64))
    if k == 0:
        return None
    cells = [[-1] * n for _ in range(n)]
    assignments = 0

    def clash(a: int, b: int, color: int) -> bool:
        for t in range(1, min(a, b) + 1):
            if cells[a - t][b - t] == color and cells[a - t][b] == color and cells[a][b - t] == color:
                return True
        return False

    def fill(idx: int, top: int) -> bool:
        nonlocal assignments
        if idx == n * n:
            return True
        a, b = divmod(idx, n)
        for color in range(min(top + 2, k)):
            assignments += 1
            if assignments > budget:
                raise SearchBudgetExceeded(k, budget)
            if clash(a, b, color):
                continue
            cells[a][b] = color
            if fill(idx + 1, max(top, color)):
                return True
        cells[a][b] = -1
        return False

    if fill(0, -1):
        return GridColoring(n, k, np.array(cells))
    return None


def grid_to_vertex_coloring(g: GridColoring) -> Coloring:
    return Coloring(tuple(int(c) for c in g.cells.ravel()), g.k)


def vertex_to_grid_coloring(c: Coloring, n: int) -> GridColoring:
    if len(c) != n * n:
        raise ValueError(f"coloring has {len(c)} vertices, a {n}x{n} board has {n * n}")
    return GridColoring(n, c.k, np.array(c.colors, dtype=np.int64).reshape(n, n))
