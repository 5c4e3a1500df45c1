"""
Orienting the rook graph
========================

Build the oriented rook graph on small boards, look at its arcs, and run the
structural checks: oriented, no directed triangle, claw-free.
"""

from rooklab import build_rook_digraph, find_claw, find_directed_triangle, is_oriented

###############################################################################
# The 2 x 2 board is a single directed 4-cycle.

d2 = build_rook_digraph(2)
for u, v in d2.graph.arcs:
    print(d2.label(u), "->", d2.label(v))

###############################################################################
# On a larger board every row and every column is a tournament.  Print the
# out-degrees inside row 1 of the 8 x 8 board: all values 0..7 appear once,
# so the row is ordered transitively.

d8 = build_rook_digraph(8)
row = [d8.vertex(1, b) for b in range(1, 9)]
print({d8.label(v): sum(d8.graph.has_arc(v, w) for w in row) for v in row})

###############################################################################
# Arc counts and the three checks for a range of board sizes.

for n in (1, 2, 4, 8, 16, 32):
    g = build_rook_digraph(n).graph
    print(
        f"N={n:2d}  arcs={g.num_arcs:6d}  oriented={is_oriented(g)[0]}"
        f"  triangle={find_directed_triangle(g)}  claw={find_claw(g) if n <= 16 else 'skipped'}"
    )
