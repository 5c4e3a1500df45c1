import itertools
import random

import pytest

from conftest import rook
from helpers import cnf_satisfiable_by_enumeration, random_oriented
from rooklab.dicolor import Coloring, find_dicoloring, is_valid_dicoloring
from rooklab.digraph import Digraph
from rooklab.satenc import (
    CnfFormula,
    MalformedModelError,
    VarMap,
    decode_model,
    encode_dicoloring,
    expected_sizes,
    parse_dimacs,
    parse_model,
    run_external_solver,
    solve_many,
    write_dimacs,
    write_model,
)

ARC = Digraph(2, [(0, 1)])
CYCLE3 = Digraph(3, [(0, 1), (1, 2), (2, 0)])


def test_write_dimacs_examples():
    assert write_dimacs(CnfFormula(1, ((1,),))) == "p cnf 1 1\n1 0\n"
    assert write_dimacs(CnfFormula(2, ((1, -2), (2,)))) == "p cnf 2 2\n1 -2 0\n2 0\n"
    assert write_dimacs(CnfFormula(0, ())) == "p cnf 0 0\n"


def test_cnf_formula_validation():
    with pytest.raises(ValueError):
        CnfFormula(1, ((2,),))
    with pytest.raises(ValueError):
        CnfFormula(1, ((),))


def test_dimacs_round_trip():
    f, _ = encode_dicoloring(rook(3).graph, 2)
    assert parse_dimacs(write_dimacs(f)) == f
    assert parse_dimacs("c comment\np cnf 3 2\n1 -2\n 0 3 0\n") == CnfFormula(3, ((1, -2), (3,)))
    with pytest.raises(ValueError):
        parse_dimacs("p cnf 2 2\n1 0\n")


def test_varmap_injective_and_dense():
    vm = VarMap(5, 3)
    ids = [vm.color_var(v, c) for v in range(5) for c in range(3)]
    ids += [vm.order_var(u, v) for u, v in itertools.permutations(range(5), 2)]
    assert sorted(ids) == list(range(1, vm.var_count + 1))
    with pytest.raises(IndexError):
        vm.order_var(2, 2)


def test_clause_and_variable_counts():
    rng = random.Random(6)
    for _ in range(30):
        d = random_oriented(rng, rng.randint(1, 9), 0.5)
        k = rng.randint(1, 4)
        f, vm = encode_dicoloring(d, k)
        assert (f.var_count, len(f.clauses)) == expected_sizes(d.n, k, d.num_arcs)
        assert f.var_count == d.n * k + d.n * (d.n - 1)
    f, _ = encode_dicoloring(rook(8).graph, 3)
    assert len(f.clauses) == 64 + 64 * 3 + 64 * 63 + 64 * 63 * 62 + 448 * 3


def test_order_variables_linked_by_exclusivity():
    f, vm = encode_dicoloring(CYCLE3, 1)
    clauses = set(f.clauses)
    for u, v in itertools.combinations(range(3), 2):
        assert (-vm.order_var(u, v), -vm.order_var(v, u)) in clauses


def test_encoding_rejects_k0():
    with pytest.raises(ValueError):
        encode_dicoloring(ARC, 0)


def test_encoding_by_exhaustive_assignment():
    # no external solver involved: evaluate every assignment
    f, _ = encode_dicoloring(ARC, 1)
    assert cnf_satisfiable_by_enumeration(f.var_count, f.clauses)
    f, _ = encode_dicoloring(CYCLE3, 1)
    assert not cnf_satisfiable_by_enumeration(f.var_count, f.clauses)
    f, _ = encode_dicoloring(CYCLE3, 2)
    assert cnf_satisfiable_by_enumeration(f.var_count, f.clauses)


def test_decode_examples():
    vm = VarMap(1, 1)
    assert decode_model([1], vm) == Coloring((0,), 1)
    vm2 = VarMap(2, 2)
    lits = [1, 2, -3, 4, 5, -6]  # vertex 0 has colors 0 and 1
    with pytest.raises(MalformedModelError):
        decode_model(lits, vm2)
    with pytest.raises(MalformedModelError):
        decode_model([1, -2], vm2)  # incomplete
    assert decode_model({1: True, 2: False, 3: False, 4: True, 5: True, 6: False}, vm2) == Coloring((0, 1), 2)


def test_parse_model_variants():
    assert parse_model("s SATISFIABLE\nv 1 -2\nv 3 0\n") == (True, [1, -2, 3])
    assert parse_model("1 -2 3 0") == (True, [1, -2, 3])
    assert parse_model("s UNSATISFIABLE\n") == (False, None)
    assert parse_model(write_model([1, -2])) == (True, [1, -2])
    with pytest.raises(MalformedModelError):
        parse_model("c nothing here\n")


def test_solver_examples(sat_solver):
    f, vm = encode_dicoloring(ARC, 1)
    assert run_external_solver(f, sat_solver)[0]
    f, vm = encode_dicoloring(CYCLE3, 1)
    assert run_external_solver(f, sat_solver) == (False, None)
    f, vm = encode_dicoloring(CYCLE3, 2)
    sat, model = run_external_solver(f, sat_solver)
    assert sat
    coloring = decode_model(model, vm)
    assert is_valid_dicoloring(CYCLE3, coloring)[0]
    assert sorted(len(c) for c in coloring.classes()) == [1, 2]


def test_sat_agrees_with_native_search(sat_solver):
    rng = random.Random(99)
    cases = []
    for _ in range(40):
        d = random_oriented(rng, rng.randint(1, 8), rng.choice([0.2, 0.5, 0.8]))
        cases.extend((d, k) for k in (1, 2, 3))
    for n in (2, 3, 4, 5):
        cases.extend((rook(n).graph, k) for k in (1, 2))
    answers = solve_many([encode_dicoloring(d, k)[0] for d, k in cases], sat_solver)
    for (d, k), (sat, model) in zip(cases, answers):
        assert sat == (find_dicoloring(d, k) is not None)
        if sat:
            _, vm = encode_dicoloring(d, k)
            assert is_valid_dicoloring(d, decode_model(model, vm))[0]
