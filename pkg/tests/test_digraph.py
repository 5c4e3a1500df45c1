import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import rook
from helpers import naive_has_claw, naive_has_triangle, random_digraph, random_oriented
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

CYCLE4 = Digraph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
CYCLE3 = Digraph(3, [(0, 1), (1, 2), (2, 0)])


def transitive_tournament(n):
    return Digraph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def test_from_arcs():
    assert from_arcs(2, [(0, 1)]).num_arcs == 1
    assert from_arcs(3, [(0, 1), (0, 1)]).num_arcs == 1
    with pytest.raises(ValueError, match="self-loop"):
        from_arcs(2, [(0, 0)])
    with pytest.raises(ValueError):
        from_arcs(2, [(0, 2)])


def test_neighbor_lists_sorted():
    d = Digraph(5, [(0, 4), (0, 2), (3, 0), (1, 0)])
    assert d.out_neighbors(0) == (2, 4)
    assert d.in_neighbors(0) == (1, 3)
    assert d.arcs == ((0, 2), (0, 4), (1, 0), (3, 0))
    assert d.neighbors(0) == {1, 2, 3, 4}


def test_is_oriented():
    assert is_oriented(CYCLE4) == (True, None)
    assert is_oriented(Digraph(2, [(0, 1), (1, 0)])) == (False, (0, 1))
    assert is_oriented(rook(8).graph)[0]


def test_induced_subdigraph():
    assert induced_subdigraph(CYCLE4, range(4)) == CYCLE4
    single = induced_subdigraph(CYCLE4, [2])
    assert (single.n, single.num_arcs, single.origin) == (1, 0, (2,))
    r4 = rook(4)
    cells = [r4.vertex(a, b) for a in (1, 2) for b in (1, 2)]
    sub = induced_subdigraph(r4.graph, cells)
    assert sub == rook(2).graph
    assert sub.origin == tuple(sorted(cells))
    with pytest.raises(ValueError):
        induced_subdigraph(CYCLE4, [0, 9])


def test_induced_keeps_exactly_inner_arcs():
    rng = random.Random(5)
    for _ in range(50):
        d = random_digraph(rng, 9, 0.4)
        keep = [v for v in range(9) if rng.random() < 0.5]
        sub = induced_subdigraph(d, keep)
        mapped = {(sub.origin[u], sub.origin[v]) for u, v in sub.arcs}
        assert mapped == {(u, v) for u, v in d.arcs if u in keep and v in keep}


def test_find_directed_triangle_examples():
    assert find_directed_triangle(CYCLE3) == (0, 1, 2)
    assert find_directed_triangle(rook(2).graph) is None
    assert find_directed_triangle(transitive_tournament(6)) is None
    assert find_directed_triangle(rook(16).graph) is None


def test_find_directed_triangle_matches_all_triples():
    rng = random.Random(11)
    for trial in range(400):
        n = rng.randint(0, 10)
        d = random_digraph(rng, n, rng.choice([0.1, 0.3, 0.5])) if trial % 2 else random_oriented(rng, n, 0.7)
        w = find_directed_triangle(d)
        assert (w is not None) == naive_has_triangle(d)
        if w is not None:
            u, v, x = w
            assert d.has_arc(u, v) and d.has_arc(v, x) and d.has_arc(x, u)


def test_find_claw_examples():
    star = Digraph(4, [(0, 1), (2, 0), (0, 3)])
    assert find_claw(star) == (0, (1, 2, 3))
    k4 = Digraph(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])
    assert find_claw(k4) is None
    assert find_claw(rook(8).graph) is None


def test_find_claw_matches_brute_force():
    rng = random.Random(3)
    for _ in range(200):
        d = random_oriented(rng, rng.randint(0, 8), rng.choice([0.2, 0.4, 0.6]))
        w = find_claw(d)
        assert (w is not None) == naive_has_claw(d)
        if w is not None:
            nb = d.neighbors(w.center)
            assert all(l in nb for l in w.leaves)
            assert all(y not in d.neighbors(x) for x, y in itertools.combinations(w.leaves, 2))


def test_rook_graphs_claw_free_small():
    for n in range(1, 9):
        assert find_claw(rook(n).graph) is None


def test_is_acyclic_examples():
    ok, order = is_acyclic(Digraph(3))
    assert ok and sorted(order) == [0, 1, 2]
    ok, cycle = is_acyclic(CYCLE4)
    assert not ok and len(cycle) == 4
    ok, order = is_acyclic(transitive_tournament(5))
    assert ok and order == [0, 1, 2, 3, 4]


def _check_witness(d, ok, witness):
    if ok:
        assert sorted(witness) == list(range(d.n))
        where = {v: i for i, v in enumerate(witness)}
        assert all(where[u] < where[v] for u, v in d.arcs)
    else:
        assert len(set(witness)) == len(witness) >= 2
        for i, u in enumerate(witness):
            assert d.has_arc(u, witness[(i + 1) % len(witness)])


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 12), st.floats(0.0, 0.6), st.integers(0, 2**32))
def test_is_acyclic_witness_validates(n, p, seed):
    d = random_digraph(random.Random(seed), n, p)
    ok, witness = is_acyclic(d)
    _check_witness(d, ok, witness)


def test_is_induced_directed_4cycle():
    assert is_induced_directed_4cycle(rook(2).graph, [0, 1, 3, 2])
    assert is_induced_directed_4cycle(rook(2).graph, [0, 1, 2, 3])  # any listing of the set
    assert not is_induced_directed_4cycle(transitive_tournament(4), [0, 1, 2, 3])
    r4 = rook(4)
    quad = [r4.vertex(1, 1), r4.vertex(1, 2), r4.vertex(2, 2), r4.vertex(2, 1)]
    assert is_induced_directed_4cycle(r4.graph, quad)
    two_digons = Digraph(4, [(0, 1), (1, 0), (2, 3), (3, 2)])
    assert not is_induced_directed_4cycle(two_digons, [0, 1, 2, 3])
    chorded = Digraph(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
    assert not is_induced_directed_4cycle(chorded, [0, 1, 2, 3])
    with pytest.raises(ValueError):
        is_induced_directed_4cycle(CYCLE4, [0, 1, 1, 2])


def test_digraph_equality_and_hash():
    a = Digraph(3, [(0, 1), (1, 2)])
    b = Digraph(3, [(1, 2), (0, 1), (0, 1)])
    assert a == b and hash(a) == hash(b)
    assert a != Digraph(4, [(0, 1), (1, 2)])
