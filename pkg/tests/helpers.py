"""Independent reference implementations used as test oracles."""

import itertools
import random

from rooklab.digraph import Digraph


def random_oriented(rng: random.Random, n: int, density: float) -> Digraph:
    arcs = []
    for u, v in itertools.combinations(range(n), 2):
        if rng.random() < density:
            arcs.append((u, v) if rng.random() < 0.5 else (v, u))
    return Digraph(n, arcs)


def random_digraph(rng: random.Random, n: int, density: float) -> Digraph:
    """Arcs chosen independently per ordered pair, so 2-cycles can occur."""
    return Digraph(n, [(u, v) for u in range(n) for v in range(n) if u != v and rng.random() < density])


def naive_has_triangle(d: Digraph) -> bool:
    arcs = set(d.arcs)
    return any(
        {(u, v), (v, w), (w, u)} <= arcs or {(u, w), (w, v), (v, u)} <= arcs
        for u, v, w in itertools.combinations(range(d.n), 3)
    )


def naive_has_claw(d: Digraph) -> bool:
    adj = {frozenset(a) for a in d.arcs}
    for c in range(d.n):
        others = [v for v in range(d.n) if v != c]
        for x, y, z in itertools.combinations(others, 3):
            if all(frozenset((c, l)) in adj for l in (x, y, z)) and not any(
                frozenset(p) in adj for p in ((x, y), (x, z), (y, z))
            ):
                return True
    return False


def naive_lsb_diff(x: int, y: int) -> int:
    j = 0
    while (x >> j) % 2 == (y >> j) % 2:
        j += 1
    return j


def has_cycle_within(d: Digraph, vertices) -> bool:
    """Cycle test by repeatedly deleting sinks (independent of the library's checks)."""
    alive = set(vertices)
    changed = True
    while changed:
        changed = False
        for v in list(alive):
            if not any(w in alive for w in d.out_neighbors(v)):
                alive.discard(v)
                changed = True
    return bool(alive)


def cnf_satisfiable_by_enumeration(var_count, clauses) -> bool:
    for bits in itertools.product((False, True), repeat=var_count):
        if all(any(bits[abs(l) - 1] == (l > 0) for l in cl) for cl in clauses):
            return True
    return False
