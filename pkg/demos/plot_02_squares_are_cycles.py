"""
Squares on the board are directed 4-cycles
==========================================

Take rows ``a < c`` and columns ``b < d``.  When the two row coordinates and
the two column coordinates first differ at the same bit (in particular when
``c - a == d - b``), the cells ``(a,b), (a,d), (c,d), (c,b)`` induce a
directed 4-cycle.
"""

from rooklab.bitrule import build_rook_digraph, iter_squares, square_cycle_failures
from rooklab.digraph import is_induced_directed_4cycle

rook = build_rook_digraph(8)

###############################################################################
# One square with side 3, written out.

a, c, b, d = 2, 5, 4, 7
quad = rook.square_vertices(a, c, b, d)
print([rook.label(v) for v in quad], is_induced_directed_4cycle(rook.graph, quad))

###############################################################################
# Sweep every square and every quadruple with matching lowest differing bit.

for dyadic in (False, True):
    total = sum(1 for _ in iter_squares(rook.n, dyadic))
    print(f"dyadic={dyadic}: {total} quadruples, failures={square_cycle_failures(rook, dyadic)}")

###############################################################################
# The bit condition matters: rows 1,2 differ at bit 0 but columns 2,4 first
# differ at bit 1, and those four cells do not form a directed cycle.

print(is_induced_directed_4cycle(rook.graph, rook.square_vertices(1, 2, 2, 4)))
