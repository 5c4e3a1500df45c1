"""CNF encoding of "D has an acyclic k-coloring", DIMACS I/O, and model decoding.

Variables:

* ``color_var(v, c)`` for every vertex ``v`` and color ``c``: numbered
  ``v * k + c + 1``.
* ``order_var(u, v)`` for every ordered pair ``u != v``: "u precedes v" in one
  global strict linear order.  Numbered after the color variables.

Clauses: at-least-one and pairwise at-most-one color per vertex; antisymmetry
and totality of the order (exactly one of ``order_var(u,v)``,
``order_var(v,u)``); transitivity over all ordered triples; and for each arc
``(u, v)`` and color ``c``, a monochromatic arc must go forward in the order.

A single shared order is enough.  The color classes partition the vertices,
so the union of the class-induced subdigraphs is a disjoint union of DAGs and
any topological order of that union orders every class at once.  Conversely
a monochromatic cycle cannot be consistent with any linear order.

Solvers are run as separate processes on DIMACS files.
"""

from __future__ import annotations

import os
import shutil
import subprocess
import sys
import tempfile
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence, Union

from rooklab.dicolor import Coloring
from rooklab.digraph import Digraph

__all__ = [
    "CnfFormula",
    "VarMap",
    "MalformedModelError",
    "SolverUnavailable",
    "encode_dicoloring",
    "expected_sizes",
    "write_dimacs",
    "parse_dimacs",
    "parse_model",
    "write_model",
    "decode_model",
    "find_external_solver",
    "run_external_solver",
    "solve_many",
]


class MalformedModelError(ValueError):
    pass


class SolverUnavailable(RuntimeError):
    pass


@dataclass(frozen=True)
class CnfFormula:
    var_count: int
    clauses: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        clauses = tuple(tuple(cl) for cl in self.clauses)
        object.__setattr__(self, "clauses", clauses)
        for cl in clauses:
            if not cl:
                raise ValueError("empty clause")
            for lit in cl:
                if lit == 0 or abs(lit) > self.var_count:
                    raise ValueError(f"literal {lit} out of range for {self.var_count} variables")


@dataclass(frozen=True)
class VarMap:
    n: int
    k: int

    def color_var(self, v: int, c: int) -> int:
        if not (0 <= v < self.n and 0 <= c < self.k):
            raise IndexError((v, c))
        return v * self.k + c + 1

    def order_var(self, u: int, v: int) -> int:
        if u == v or not (0 <= u < self.n and 0 <= v < self.n):
            raise IndexError((u, v))
        # row u holds the n-1 partners of u, skipping u itself
        return self.n * self.k + u * (self.n - 1) + (v if v < u else v - 1) + 1

    @property
    def var_count(self) -> int:
        return self.n * self.k + self.n * (self.n - 1)


def expected_sizes(n: int, k: int, m: int) -> tuple[int, int]:
    """Closed-form ``(var_count, clause_count)`` for ``n`` vertices, ``k`` colors, ``m`` arcs."""
    variables = n * k + n * (n - 1)
    clauses = (
        n  # at least one color
        + n * k * (k - 1) // 2  # at most one color
        + n * (n - 1)  # exactly one of the two directions per unordered pair
        + n * (n - 1) * (n - 2)  # transitivity
        + m * k  # monochromatic arcs go forward
    )
    return variables, clauses


def encode_dicoloring(d: Digraph, k: int) -> tuple[CnfFormula, VarMap]:
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    n = d.n
    vm = VarMap(n, k)
    col, order = vm.color_var, vm.order_var
    clauses: list[tuple[int, ...]] = []
    for v in range(n):
        clauses.append(tuple(col(v, c) for c in range(k)))
    for v in range(n):
        for c1 in range(k):
            for c2 in range(c1 + 1, k):
                clauses.append((-col(v, c1), -col(v, c2)))
    for u in range(n):
        for v in range(u + 1, n):
            clauses.append((-order(u, v), -order(v, u)))
            clauses.append((order(u, v), order(v, u)))
    for u in range(n):
        for v in range(n):
            if v == u:
                continue
            for w in range(n):
                if w != u and w != v:
                    clauses.append((-order(u, v), -order(v, w), order(u, w)))
    for u, v in d.arcs:
        for c in range(k):
            clauses.append((-col(u, c), -col(v, c), order(u, v)))
    return CnfFormula(vm.var_count, tuple(clauses)), vm


def write_dimacs(f: CnfFormula) -> str:
    lines = [f"p cnf {f.var_count} {len(f.clauses)}"]
    lines.extend(" ".join(map(str, cl)) + " 0" for cl in f.clauses)
    return "\n".join(lines) + "\n"


def parse_dimacs(text: str) -> CnfFormula:
    var_count = None
    declared = None
    clauses = []
    current: list[int] = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ValueError(f"line {lineno}: bad header {line!r}")
            var_count, declared = int(parts[2]), int(parts[3])
            continue
        if var_count is None:
            raise ValueError(f"line {lineno}: clause before header")
        for tok in line.split():
            lit = int(tok)
            if lit == 0:
                clauses.append(tuple(current))
                current = []
            else:
                current.append(lit)
    if var_count is None:
        raise ValueError("missing 'p cnf' header")
    if current:
        raise ValueError("last clause not terminated by 0")
    if declared != len(clauses):
        raise ValueError(f"header declares {declared} clauses, found {len(clauses)}")
    return CnfFormula(var_count, tuple(clauses))


def parse_model(text: str) -> tuple[bool, Optional[list[int]]]:
    """Read solver output: ``s``/``v`` lines or bare signed integers.

    Returns ``(satisfiable, literals)``; literals is ``None`` for UNSAT.
    """
    literals = []
    status = None
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("s "):
            status = line[2:].strip().upper()
            continue
        if line.upper() in ("SAT", "UNSAT", "SATISFIABLE", "UNSATISFIABLE"):
            status = line.upper()
            continue
        if line.startswith("v "):
            line = line[2:]
        for tok in line.split():
            if tok == "v":
                continue
            lit = int(tok)
            if lit:
                literals.append(lit)
    if status in ("UNSAT", "UNSATISFIABLE"):
        return False, None
    if status is None and not literals:
        raise MalformedModelError("solver output has neither status nor model")
    return True, literals


def write_model(literals: Iterable[int]) -> str:
    return "s SATISFIABLE\nv " + " ".join(map(str, literals)) + " 0\n"


def decode_model(model: Union[Sequence[int], Mapping[int, bool]], vm: VarMap) -> Coloring:
    """Coloring read from a full assignment.

    ``model`` is either DIMACS-style signed literals or a mapping from
    variable number to truth value.  Every variable must be assigned.
    """
    truth = _truth_table(model, vm.var_count)
    colors = []
    for v in range(vm.n):
        on = [c for c in range(vm.k) if truth[vm.color_var(v, c)]]
        if len(on) != 1:
            raise MalformedModelError(f"vertex {v} has {len(on)} true color variables")
        colors.append(on[0])
    return Coloring(colors, vm.k)


def _truth_table(model, var_count: int) -> list[bool]:
    truth: list[Optional[bool]] = [None] * (var_count + 1)
    pairs = model.items() if isinstance(model, Mapping) else ((abs(lit), lit > 0) for lit in model)
    for var, val in pairs:
        if var == 0:
            raise MalformedModelError("variable 0 does not exist")
        if var <= var_count:
            if truth[var] is not None and truth[var] != bool(val):
                raise MalformedModelError(f"variable {var} assigned both ways")
            truth[var] = bool(val)
    missing = [i for i in range(1, var_count + 1) if truth[i] is None]
    if missing:
        raise MalformedModelError(f"model leaves {len(missing)} variables unassigned (first: {missing[0]})")
    return truth  # type: ignore[return-value]


_KNOWN_SOLVERS = ("kissat", "cadical", "minisat", "glucose", "cryptominisat5", "picosat")


def find_external_solver() -> Optional[list[str]]:
    """Command prefix for a DIMACS solver, or ``None``.

    ``ROOKLAB_SAT_SOLVER`` wins if set.  Then a known binary on ``PATH``, then
    the python-sat shim (run as its own process) if python-sat is installed.
    """
    env = os.environ.get("ROOKLAB_SAT_SOLVER")
    if env:
        return env.split()
    for name in _KNOWN_SOLVERS:
        path = shutil.which(name)
        if path:
            return [path]
    try:
        import pysat  # noqa: F401
    except ImportError:
        return None
    return [sys.executable, "-m", "rooklab._pysat_runner"]


def run_external_solver(f: CnfFormula, command: Optional[Sequence[str]] = None,
                        timeout: Optional[float] = None) -> tuple[bool, Optional[list[int]]]:
    """Write ``f`` to a temp DIMACS file, run the solver on it, parse its answer."""
    cmd = list(command) if command else find_external_solver()
    if not cmd:
        raise SolverUnavailable("no SAT solver found (set ROOKLAB_SAT_SOLVER)")
    with tempfile.TemporaryDirectory(prefix="rooklab-") as tmp:
        path = os.path.join(tmp, "formula.cnf")
        with open(path, "w") as fh:
            fh.write(write_dimacs(f))
        proc = subprocess.run(cmd + [path], capture_output=True, text=True, timeout=timeout)
    # minisat-style exit codes: 10 SAT, 20 UNSAT
    if proc.returncode not in (0, 10, 20):
        raise RuntimeError(f"solver {cmd[0]} failed ({proc.returncode}): {proc.stderr.strip()}")
    return parse_model(proc.stdout)


def solve_many(formulas: Sequence[CnfFormula], command: Optional[Sequence[str]] = None,
               timeout: Optional[float] = None) -> list[tuple[bool, Optional[list[int]]]]:
    """Solve several formulas.

    The python-sat shim takes all files in one process; any other solver is
    run once per formula.
    """
    cmd = list(command) if command else find_external_solver()
    if not cmd:
        raise SolverUnavailable("no SAT solver found (set ROOKLAB_SAT_SOLVER)")
    if "rooklab._pysat_runner" not in cmd or len(formulas) < 2:
        return [run_external_solver(f, cmd, timeout) for f in formulas]
    with tempfile.TemporaryDirectory(prefix="rooklab-") as tmp:
        paths = []
        for i, f in enumerate(formulas):
            path = os.path.join(tmp, f"formula{i}.cnf")
            with open(path, "w") as fh:
                fh.write(write_dimacs(f))
            paths.append(path)
        proc = subprocess.run(cmd + paths, capture_output=True, text=True, timeout=timeout)
    if proc.returncode != 0:
        raise RuntimeError(f"solver failed ({proc.returncode}): {proc.stderr.strip()}")
    blocks: list[list[str]] = []
    for line in proc.stdout.splitlines():
        if line.startswith("c file "):
            blocks.append([])
        elif blocks:
            blocks[-1].append(line)
    if len(blocks) != len(formulas):
        raise RuntimeError(f"solver answered {len(blocks)} of {len(formulas)} formulas")
    return [parse_model("\n".join(b)) for b in blocks]
