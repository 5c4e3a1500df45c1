"""Exact dichromatic number.

A coloring is valid when every color class induces an acyclic subdigraph.
:func:`find_dicoloring` decides whether ``k`` colors suffice with a
conflict-driven backtracking search (see :class:`_Search`);
:func:`brute_force_dichromatic` is a separate enumerator used as a reference
on tiny inputs.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field
from typing import Optional, Sequence

from rooklab.digraph import Digraph, induced_subdigraph, is_acyclic

__all__ = [
    "Coloring",
    "DicolorResult",
    "SearchBudgetExceeded",
    "DEFAULT_BUDGET",
    "is_valid_dicoloring",
    "find_dicoloring",
    "dichromatic_number",
    "brute_force_dichromatic",
    "BRUTE_FORCE_MAX_VERTICES",
]

DEFAULT_BUDGET = 50_000_000
BRUTE_FORCE_MAX_VERTICES = 9


class SearchBudgetExceeded(RuntimeError):
    """The node budget ran out before the search could decide the instance."""

    def __init__(self, k: int, nodes: int):
        super().__init__(f"INCONCLUSIVE: budget of {nodes} nodes exhausted at k={k}")
        self.k = k
        self.nodes = nodes


@dataclass(frozen=True)
class Coloring:
    colors: tuple[int, ...]
    k: int

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(self.colors))
        if self.k < 0:
            raise ValueError("k must be >= 0")
        for v, c in enumerate(self.colors):
            if not 0 <= c < self.k:
                raise ValueError(f"vertex {v} has color {c} outside [0,{self.k})")

    def __len__(self) -> int:
        return len(self.colors)

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.k)]
        for v, c in enumerate(self.colors):
            out[c].append(v)
        return out


@dataclass(frozen=True)
class DicolorResult:
    chi: int
    witness: Coloring
    certificate: Optional[str] = None
    nodes: int = field(default=0, compare=False)


def is_valid_dicoloring(d: Digraph, coloring: Coloring) -> tuple[bool, Optional[list[int]]]:
    """Check every color class for a directed cycle.

    Returns ``(True, None)`` or ``(False, cycle)`` where ``cycle`` lists vertex
    ids of ``d`` that all share one color.
    """
    if len(coloring) != d.n:
        raise ValueError(f"coloring covers {len(coloring)} vertices, digraph has {d.n}")
    for members in coloring.classes():
        if not members:
            continue
        sub = induced_subdigraph(d, members)
        ok, cycle = is_acyclic(sub)
        if not ok:
            return False, [sub.origin[i] for i in cycle]
    return True, None


def _default_budget() -> int:
    env = os.environ.get("ROOKLAB_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


class _Search:
    """Conflict-driven backtracking over the literals "vertex v has color c".

    Clauses cover at-least-one / at-most-one color per vertex and everything
    learned.  The acyclicity constraint is a propagator: each class keeps
    ``reach[c][x]``, the class members reachable from ``x`` inside the class
    (bitset, ``x`` included).  When ``u`` cannot join class ``c`` without
    closing a cycle, "u not c" is implied, explained on demand by a path
    inside the class from an out-neighbor of ``u`` to an in-neighbor of ``u``.
    Conflicts are analysed to the first unique implication point; the learned
    clause drives the backjump.
    """

    def __init__(self, d: Digraph, k: int, budget: int):
        self.d = d
        self.k = k
        self.budget = budget
        self.nodes = 0
        n = d.n
        self.n = n
        self.out_mask = [sum(1 << w for w in d.out_neighbors(v)) for v in range(n)]
        self.in_mask = [sum(1 << w for w in d.in_neighbors(v)) for v in range(n)]
        nvars = n * k
        self.value = [-1] * nvars  # 1 true, 0 false
        self.level = [0] * nvars
        self.reason: list = [None] * nvars
        self.pos = [0] * nvars
        self.trail: list[int] = []
        self.trail_lim: list[int] = []
        self.qhead = 0
        self.clauses: list[list[int]] = []
        self.watches: list[list[int]] = [[] for _ in range(2 * nvars)]
        self.members = [0] * k
        self.reach: list[dict[int, int]] = [dict() for _ in range(k)]
        self.undo: list[tuple[int, int, int, dict[int, int]]] = []
        self.colored = [-1] * n
        # vertex activity; initial values follow total degree so the first
        # decisions go to high-degree vertices, smaller id first
        self.activity = [float(d.degree(v)) for v in range(n)]
        self.bump = 1.0
        self.phase = [0] * n
        self.unsat = False
        for v in range(n):
            self._add_clause([self._lit(v, c) for c in range(k)])
            for c1 in range(k):
                for c2 in range(c1 + 1, k):
                    self._add_clause([self._lit(v, c1) ^ 1, self._lit(v, c2) ^ 1])
        if n and k > 1:
            # colors are interchangeable: vertex 0 takes color 0
            self._enqueue(self._lit(0, 0), None)

    # literal = 2 * var + (1 if negated); var = v * k + c
    def _lit(self, v: int, c: int) -> int:
        return 2 * (v * self.k + c)

    def _lit_value(self, lit: int) -> int:
        val = self.value[lit >> 1]
        return val if val < 0 else val ^ (lit & 1)

    def _add_clause(self, lits: list[int]) -> None:
        idx = len(self.clauses)
        self.clauses.append(lits)
        if len(lits) == 1:
            if self._lit_value(lits[0]) == 0:
                self.unsat = True
            elif self._lit_value(lits[0]) < 0:
                self._enqueue(lits[0], None)
            return
        self.watches[lits[0]].append(idx)
        self.watches[lits[1]].append(idx)

    def _enqueue(self, lit: int, reason) -> None:
        var = lit >> 1
        self.value[var] = 1 - (lit & 1)
        self.level[var] = len(self.trail_lim)
        self.reason[var] = reason
        self.pos[var] = len(self.trail)
        self.trail.append(lit)

    def _blocking_outs(self, u: int, c: int) -> int:
        """Members of class ``c`` that are out-neighbors of ``u`` and reach an in-neighbor of ``u``."""
        members = self.members[c]
        outs = self.out_mask[u] & members
        ins = self.in_mask[u] & members
        if not outs or not ins:
            return 0
        reach = self.reach[c]
        hits = 0
        while outs:
            low = outs & -outs
            if reach[low.bit_length() - 1] & ins:
                hits |= low
            outs ^= low
        return hits

    def _class_path(self, u: int, c: int, before: int) -> list[int]:
        """Path inside class ``c`` (members placed before trail index ``before``)
        from an out-neighbor of ``u`` to an in-neighbor of ``u``."""
        k = self.k
        allowed = []
        members = self.members[c]
        while members:
            low = members & -members
            w = low.bit_length() - 1
            members ^= low
            if self.pos[w * k + c] < before:
                allowed.append(w)
        allowed_set = set(allowed)
        targets = {w for w in self.d.in_neighbors(u) if w in allowed_set}
        parent: dict[int, int] = {}
        frontier = [w for w in self.d.out_neighbors(u) if w in allowed_set]
        for w in frontier:
            parent[w] = -1
        while frontier:
            nxt = []
            for w in frontier:
                if w in targets:
                    path = [w]
                    while parent[path[-1]] != -1:
                        path.append(parent[path[-1]])
                    return path
                for x in self.d.out_neighbors(w):
                    if x in allowed_set and x not in parent:
                        parent[x] = w
                        nxt.append(x)
            frontier = nxt
        raise AssertionError("theory reason lost its path")

    def _reason_lits(self, var: int) -> list[int]:
        r = self.reason[var]
        if r[0] == "c":
            return self.clauses[r[1]]
        _, u, c, before = r
        return [self._lit(u, c) ^ 1] + [self._lit(w, c) ^ 1 for w in self._class_path(u, c, before)]

    def _theory_add(self, v: int, c: int) -> Optional[list[int]]:
        """Add ``v`` to class ``c``; return a conflict clause or propagate exclusions."""
        if self._blocking_outs(v, c):
            before = len(self.trail)
            return [self._lit(v, c) ^ 1] + [self._lit(w, c) ^ 1 for w in self._class_path(v, c, before)]
        reach = self.reach[c]
        members = self.members[c]
        mine = 1 << v
        outs = self.out_mask[v] & members
        while outs:
            low = outs & -outs
            mine |= reach[low.bit_length() - 1]
            outs ^= low
        saved = {}
        ins = self.in_mask[v] & members
        if ins:
            for x, rx in reach.items():
                if rx & ins:
                    saved[x] = rx
                    reach[x] = rx | mine
        reach[v] = mine
        self.members[c] = members | (1 << v)
        self.colored[v] = c
        self.undo.append((self.pos[v * self.k + c], v, c, saved))
        # only vertices touching the class can become blocked
        touched = 0
        for x in reach:
            touched |= self.out_mask[x] | self.in_mask[x]
        touched &= ~self.members[c]
        before = len(self.trail)
        while touched:
            low = touched & -touched
            u = low.bit_length() - 1
            touched ^= low
            if self.value[u * self.k + c] < 0 and self._blocking_outs(u, c):
                self._enqueue(self._lit(u, c) ^ 1, ("t", u, c, before))
        return None

    def _propagate(self) -> Optional[list[int]]:
        while self.qhead < len(self.trail):
            lit = self.trail[self.qhead]
            self.qhead += 1
            false_lit = lit ^ 1
            ws = self.watches[false_lit]
            i = 0
            while i < len(ws):
                ci = ws[i]
                cl = self.clauses[ci]
                if cl[0] == false_lit:
                    cl[0], cl[1] = cl[1], cl[0]
                if self._lit_value(cl[0]) == 1:
                    i += 1
                    continue
                for j in range(2, len(cl)):
                    if self._lit_value(cl[j]) != 0:
                        cl[1], cl[j] = cl[j], cl[1]
                        self.watches[cl[1]].append(ci)
                        ws[i] = ws[-1]
                        ws.pop()
                        break
                else:
                    if self._lit_value(cl[0]) == 0:
                        return cl
                    self._enqueue(cl[0], ("c", ci))
                    i += 1
            if not lit & 1:
                var = lit >> 1
                conflict = self._theory_add(var // self.k, var % self.k)
                if conflict is not None:
                    return conflict
        return None

    def _analyze(self, conflict: list[int]) -> tuple[list[int], int]:
        seen = set()
        learnt = [0]
        counter = 0
        cur = len(self.trail_lim)
        idx = len(self.trail) - 1
        clause = conflict
        p = -1
        while True:
            for q in clause:
                if q == p:
                    continue
                var = q >> 1
                if var in seen or self.level[var] == 0:
                    continue
                seen.add(var)
                self._bump(var // self.k)
                if self.level[var] == cur:
                    counter += 1
                else:
                    learnt.append(q)
            while (self.trail[idx] >> 1) not in seen:
                idx -= 1
            p = self.trail[idx]
            idx -= 1
            seen.discard(p >> 1)
            counter -= 1
            if counter == 0:
                break
            clause = self._reason_lits(p >> 1)
        learnt[0] = p ^ 1
        if len(learnt) == 1:
            return learnt, 0
        best = max(range(1, len(learnt)), key=lambda i: self.level[learnt[i] >> 1])
        learnt[1], learnt[best] = learnt[best], learnt[1]
        return learnt, self.level[learnt[1] >> 1]

    def _bump(self, v: int) -> None:
        self.activity[v] += self.bump
        if self.activity[v] > 1e100:
            self.activity = [a * 1e-100 for a in self.activity]
            self.bump *= 1e-100

    def _backtrack(self, lvl: int) -> None:
        if len(self.trail_lim) <= lvl:
            return
        stop = self.trail_lim[lvl]
        while self.undo and self.undo[-1][0] >= stop:
            _, v, c, saved = self.undo.pop()
            reach = self.reach[c]
            del reach[v]
            reach.update(saved)
            self.members[c] &= ~(1 << v)
            self.colored[v] = -1
            self.phase[v] = c
        for lit in self.trail[stop:]:
            var = lit >> 1
            self.value[var] = -1
            self.reason[var] = None
        del self.trail[stop:]
        del self.trail_lim[lvl:]
        self.qhead = len(self.trail)

    def _decide(self) -> bool:
        best = -1
        for v in range(self.n):
            if self.colored[v] < 0 and (best < 0 or self.activity[v] > self.activity[best]):
                best = v
        if best < 0:
            return False
        base = best * self.k
        opts = [c for c in range(self.k) if self.value[base + c] < 0]
        c = self.phase[best] if self.phase[best] in opts else opts[0]
        self.trail_lim.append(len(self.trail))
        self._enqueue(self._lit(best, c), None)
        return True

    def run(self) -> Optional[list[int]]:
        if self.unsat:
            return None
        while True:
            conflict = self._propagate()
            if conflict is not None:
                self.nodes += 1
                if self.nodes > self.budget:
                    raise SearchBudgetExceeded(self.k, self.budget)
                if not self.trail_lim:
                    return None
                learnt, lvl = self._analyze(conflict)
                self._backtrack(lvl)
                self.bump /= 0.95
                if len(learnt) == 1:
                    self._enqueue(learnt[0], None)
                else:
                    idx = len(self.clauses)
                    self.clauses.append(learnt)
                    self.watches[learnt[0]].append(idx)
                    self.watches[learnt[1]].append(idx)
                    self._enqueue(learnt[0], ("c", idx))
                continue
            if not self._decide():
                return list(self.colored)
            self.nodes += 1
            if self.nodes > self.budget:
                raise SearchBudgetExceeded(self.k, self.budget)


def find_dicoloring(d: Digraph, k: int, budget: Optional[int] = None) -> Optional[Coloring]:
    """A valid acyclic ``k``-coloring of ``d``, or ``None`` if none exists.

    Raises :class:`SearchBudgetExceeded` when the node budget runs out; that is
    never reported as nonexistence.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    if k == 0:
        if d.n:
            raise ValueError("k = 0 is only meaningful for the empty digraph")
        return Coloring((), 0)
    search = _Search(d, k, _default_budget() if budget is None else budget)
    colors = search.run()
    return None if colors is None else Coloring(colors, k)


def dichromatic_number(d: Digraph, budget: Optional[int] = None) -> DicolorResult:
    """Least ``k`` with a valid ``k``-coloring, counting up from 1."""
    if d.n == 0:
        return DicolorResult(0, Coloring((), 0))
    budget = _default_budget() if budget is None else budget
    nodes = 0
    for k in itertools.count(1):
        search = _Search(d, k, budget)
        colors = search.run()
        nodes += search.nodes
        if colors is not None:
            note = None if k == 1 else f"k={k - 1} refuted by exhaustive search"
            return DicolorResult(k, Coloring(colors, k), note, nodes)
    raise AssertionError("unreachable")


def brute_force_dichromatic(d: Digraph) -> int:
    """Reference value by trying every coloring; small digraphs only."""
    if d.n > BRUTE_FORCE_MAX_VERTICES:
        raise ValueError(f"brute force limited to {BRUTE_FORCE_MAX_VERTICES} vertices, got {d.n}")
    if d.n == 0:
        return 0
    for k in range(1, d.n + 1):
        for colors in itertools.product(range(k), repeat=d.n):
            if _classes_acyclic(d, colors, k):
                return k
    raise AssertionError("unreachable: n colors always suffice")


def _classes_acyclic(d: Digraph, colors: Sequence[int], k: int) -> bool:
    # plain DFS three-color cycle test per class, kept apart from the search code
    for c in range(k):
        state = {v: 0 for v in range(d.n) if colors[v] == c}
        for root in state:
            if state[root]:
                continue
            stack = [(root, iter(d.out_neighbors(root)))]
            state[root] = 1
            while stack:
                v, it = stack[-1]
                for w in it:
                    if w not in state:
                        continue
                    if state[w] == 1:
                        return False
                    if state[w] == 0:
                        state[w] = 1
                        stack.append((w, iter(d.out_neighbors(w))))
                        break
                else:
                    state[v] = 2
                    stack.pop()
    return True
