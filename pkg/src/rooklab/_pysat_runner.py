"""Standalone DIMACS solver process backed by python-sat.

Usage: ``python -m rooklab._pysat_runner FILE.cnf [FILE.cnf ...]``.

Prints competition format (``s ...`` and ``v ...`` lines).  With one file the
exit code is 10 (SAT) or 20 (UNSAT); with several, each answer is preceded by
a ``c file <path>`` line and the exit code is 0.
"""

import sys

from pysat.formula import CNF
from pysat.solvers import Solver


def solve_file(path):
    cnf = CNF(from_file=path)
    with Solver(name="cadical153", bootstrap_with=cnf.clauses) as s:
        if s.solve():
            print("s SATISFIABLE")
            print("v " + " ".join(map(str, s.get_model())) + " 0")
            return True
    print("s UNSATISFIABLE")
    return False


def main(argv=None):
    argv = sys.argv[1:] if argv is None else argv
    if not argv:
        print("usage: python -m rooklab._pysat_runner FILE.cnf [FILE.cnf ...]", file=sys.stderr)
        return 2
    if len(argv) == 1:
        return 10 if solve_file(argv[0]) else 20
    for path in argv:
        print(f"c file {path}")
        solve_file(path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
