"""Oriented rook graphs without directed triangles, and tools to measure
their dichromatic number."""

from rooklab.bitrule import (
    CellCoord,
    Direction,
    RookDigraph,
    bit,
    build_rook_digraph,
    generalized_square_predicate,
    lsb_diff,
    orient_col,
    orient_row,
    two_adic_valuation,
)
from rooklab.dicolor import (
    Coloring,
    DicolorResult,
    SearchBudgetExceeded,
    brute_force_dichromatic,
    dichromatic_number,
    find_dicoloring,
    is_valid_dicoloring,
)
from rooklab.digraph import (
    Digraph,
    find_claw,
    find_directed_triangle,
    from_arcs,
    induced_subdigraph,
    is_acyclic,
    is_induced_directed_4cycle,
    is_oriented,
)
from rooklab.ramsey import (
    GridColoring,
    SquareWitness,
    find_monochromatic_square,
    grid_to_vertex_coloring,
    square_free_search,
    verify_square_witness,
    vertex_to_grid_coloring,
)
from rooklab.satenc import CnfFormula, VarMap, decode_model, encode_dicoloring, write_dimacs

__version__ = "0.1.0"
