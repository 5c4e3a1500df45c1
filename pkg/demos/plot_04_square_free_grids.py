"""
Grids without monochromatic squares
===================================

Every coloring of a large enough grid with a fixed number of colors contains
four cells of one color at the corners of an axis-parallel square.  On small
grids we can search for colorings that avoid this, and see when the search
proves that none exist.
"""

from rooklab.dicolor import SearchBudgetExceeded
from rooklab.ramsey import find_monochromatic_square, square_free_search

###############################################################################
# One color: the 2 x 2 grid is already forced.

print(square_free_search(2, 1))

###############################################################################
# Two colors: probe increasing board sizes under a fixed budget.

for n in range(2, 8):
    try:
        g = square_free_search(n, 2, budget=2_000_000)
    except SearchBudgetExceeded:
        print(f"N={n}: inconclusive within budget")
        continue
    if g is None:
        print(f"N={n}: no square-free 2-coloring")
    else:
        print(f"N={n}: found, rescanned -> {find_monochromatic_square(g)}")
        print(g.cells)
