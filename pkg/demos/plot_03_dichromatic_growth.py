"""
Dichromatic number of small boards
==================================

Compute the exact dichromatic number of the oriented rook graph for small
boards with the native search, and confirm the first few with the SAT
encoding when a solver is installed.
"""

import time

from rooklab import build_rook_digraph, dichromatic_number, is_valid_dicoloring
from rooklab.ramsey import vertex_to_grid_coloring
from rooklab.satenc import SolverUnavailable, encode_dicoloring, solve_many

###############################################################################
# Native search.  Each witness is re-checked by the independent validator.

results = {}
for n in range(1, 11):
    g = build_rook_digraph(n).graph
    start = time.perf_counter()
    res = dichromatic_number(g)
    assert is_valid_dicoloring(g, res.witness)[0]
    results[n] = res
    print(f"N={n:2d}  chi={res.chi}  nodes={res.nodes:6d}  {time.perf_counter() - start:5.2f}s")

###############################################################################
# An optimal coloring of the 7 x 7 board, drawn as a grid.

print(vertex_to_grid_coloring(results[7].witness, 7).cells)

###############################################################################
# Cross-check with the CNF encoding: satisfiable at chi, unsatisfiable at chi-1.

try:
    for n in (4, 6, 8):
        g = build_rook_digraph(n).graph
        chi = results[n].chi
        answers = solve_many([encode_dicoloring(g, chi)[0], encode_dicoloring(g, chi - 1)[0]])
        print(f"N={n}: SAT at k={chi}: {answers[0][0]}, SAT at k={chi - 1}: {answers[1][0]}")
except SolverUnavailable as exc:
    print("skipping SAT cross-check:", exc)
