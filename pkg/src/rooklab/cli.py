"""``rooklab`` command line.

Exit codes: 0 success / all checks pass, 1 a check failed (witness printed),
2 usage or parse error, 3 inconclusive (search budget exhausted or
interrupted).
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path
from typing import Optional, Sequence

from rooklab.bitrule import build_rook_digraph, square_cycle_failures
from rooklab.dicolor import (
    DEFAULT_BUDGET,
    SearchBudgetExceeded,
    find_dicoloring,
    is_valid_dicoloring,
)
from rooklab.digraph import Digraph, find_claw, find_directed_triangle, is_oriented
from rooklab.formats import FormatError, parse_arc_list, parse_coloring, to_dot, write_arc_list, write_coloring
from rooklab.ramsey import (
    find_monochromatic_square,
    grid_to_vertex_coloring,
    square_free_search,
    vertex_to_grid_coloring,
)
from rooklab.satenc import (
    MalformedModelError,
    SolverUnavailable,
    VarMap,
    decode_model,
    encode_dicoloring,
    parse_model,
    run_external_solver,
    write_dimacs,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_INCONCLUSIVE = 3

CHECKS = ("oriented", "triangle", "claw", "squares4cycle")


class UsageError(Exception):
    pass


def _budget(args) -> int:
    if getattr(args, "budget", None) is not None:
        return args.budget
    env = os.environ.get("ROOKLAB_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _write(path: str, text: str) -> None:
    try:
        Path(path).write_text(text)
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc.strerror}") from None


def _load_digraph(path: str) -> Digraph:
    try:
        return parse_arc_list(_read(path))
    except FormatError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _label_fn(rook_n: Optional[int], d: Digraph):
    if rook_n is None:
        return str
    if rook_n * rook_n != d.n:
        raise UsageError(f"--rook-n {rook_n} does not match a digraph on {d.n} vertices")
    return lambda v: f"({v // rook_n + 1},{v % rook_n + 1})"


def cmd_build(args) -> int:
    if args.n < 1:
        raise UsageError("--n must be >= 1")
    rook = build_rook_digraph(args.n)
    _write(args.out, write_arc_list(rook.graph))
    print(f"n={rook.graph.n} m={rook.graph.num_arcs}")
    if args.verbose:
        for v in range(rook.graph.n):
            print(f"{v} {rook.label(v)}")
    return EXIT_OK


def cmd_verify(args) -> int:
    d = _load_digraph(args.input)
    checks = args.checks.split(",") if args.checks else list(CHECKS)
    unknown = [c for c in checks if c not in CHECKS]
    if unknown:
        raise UsageError(f"unknown check(s): {', '.join(unknown)}")
    label = _label_fn(args.rook_n, d)
    failed = False
    for check in checks:
        if check == "oriented":
            ok, pair = is_oriented(d)
            detail = "" if ok else f"opposite arcs {label(pair[0])}<->{label(pair[1])}"
        elif check == "triangle":
            w = find_directed_triangle(d)
            ok = w is None
            detail = "" if ok else "directed triangle " + " -> ".join(label(v) for v in w)
        elif check == "claw":
            w = find_claw(d)
            ok = w is None
            detail = "" if ok else f"claw center {label(w.center)} leaves " + ", ".join(label(v) for v in w.leaves)
        else:
            if args.rook_n is None:
                raise UsageError("squares4cycle needs --rook-n")
            rook = build_rook_digraph(args.rook_n)
            if rook.graph != d:
                ok, detail = False, f"input is not D_{args.rook_n}"
            else:
                bad = square_cycle_failures(rook, dyadic=args.dyadic)
                ok = not bad
                detail = "" if ok else "square a,c,b,d = {},{},{},{} is not a directed 4-cycle".format(*bad[0])
        print(f"{check}: {'PASS' if ok else 'FAIL'}" + (f" ({detail})" if detail else ""))
        failed |= not ok
    return EXIT_FAIL if failed else EXIT_OK


def cmd_dichromatic(args) -> int:
    d = _load_digraph(args.input)
    if args.mode == "sat":
        return _dichromatic_sat(args, d)
    budget = _budget(args)
    out = args.out or f"{args.input}.coloring"
    if d.n == 0:
        print("chi = 0")
        return EXIT_OK
    k = 0
    try:
        for k in range(1, d.n + 1):
            coloring = find_dicoloring(d, k, budget=budget)
            if coloring is not None:
                break
    except SearchBudgetExceeded:
        print(f"INCONCLUSIVE: budget exhausted at k={k}; chi >= {k}")
        return EXIT_INCONCLUSIVE
    except KeyboardInterrupt:
        print(f"INCONCLUSIVE: interrupted at k={k}; chi >= {k}")
        return EXIT_INCONCLUSIVE
    print(f"chi = {k}")
    _write(out, write_coloring(coloring))
    return EXIT_OK


def _dichromatic_sat(args, d: Digraph) -> int:
    if args.k is None:
        raise UsageError("--mode sat needs --k")
    if args.k < 1:
        raise UsageError("--k must be >= 1")
    formula, vm = encode_dicoloring(d, args.k)
    cnf_out = args.cnf_out or f"{args.input}.k{args.k}.cnf"
    _write(cnf_out, write_dimacs(formula))
    print(f"wrote {cnf_out}: {formula.var_count} variables, {len(formula.clauses)} clauses")
    if args.model:
        text = _read(args.model)
    elif args.solve:
        try:
            sat, lits = run_external_solver(formula)
        except SolverUnavailable as exc:
            print(f"INCONCLUSIVE: {exc}")
            return EXIT_INCONCLUSIVE
        text = "s UNSATISFIABLE\n" if not sat else "v " + " ".join(map(str, lits)) + " 0\n"
    else:
        return EXIT_OK
    return _report_model(d, text, vm, args.out)


def _report_model(d: Digraph, text: str, vm, out: Optional[str]) -> int:
    try:
        sat, lits = parse_model(text)
        if not sat:
            print(f"UNSAT: no acyclic {vm.k}-coloring")
            return EXIT_OK
        coloring = decode_model(lits, vm)
    except (MalformedModelError, ValueError) as exc:
        raise UsageError(f"bad model: {exc}") from None
    ok, cycle = is_valid_dicoloring(d, coloring)
    if not ok:
        print("INVALID: monochromatic cycle " + " -> ".join(map(str, cycle)))
        return EXIT_FAIL
    print(f"SAT: valid acyclic {vm.k}-coloring")
    if out:
        _write(out, write_coloring(coloring))
    return EXIT_OK


def cmd_encode_cnf(args) -> int:
    d = _load_digraph(args.input)
    if args.k < 1:
        raise UsageError("--k must be >= 1")
    formula, _ = encode_dicoloring(d, args.k)
    _write(args.out, write_dimacs(formula))
    print(f"p cnf {formula.var_count} {len(formula.clauses)}")
    return EXIT_OK


def cmd_decode_model(args) -> int:
    d = _load_digraph(args.input)
    if args.k < 1:
        raise UsageError("--k must be >= 1")
    return _report_model(d, _read(args.model), VarMap(d.n, args.k), args.out)


def cmd_squares(args) -> int:
    try:
        coloring = parse_coloring(_read(args.coloring))
    except FormatError as exc:
        raise UsageError(f"{args.coloring}: {exc}") from None
    if len(coloring) != args.n * args.n:
        raise UsageError(f"coloring has {len(coloring)} vertices, expected {args.n * args.n}")
    if args.k is not None and coloring.k != args.k:
        raise UsageError(f"coloring declares k={coloring.k}, expected {args.k}")
    w = find_monochromatic_square(vertex_to_grid_coloring(coloring, args.n))
    if w is None:
        print("none")
        return EXIT_OK
    print(f"({w.x},{w.y},{w.t})")
    return EXIT_FAIL


def cmd_square_free_search(args) -> int:
    try:
        g = square_free_search(args.n, args.k, budget=_budget(args))
    except SearchBudgetExceeded:
        print("INCONCLUSIVE: budget exhausted")
        return EXIT_INCONCLUSIVE
    if g is None:
        print(f"none: every {args.k}-coloring of the {args.n}x{args.n} grid has a monochromatic square")
        return EXIT_FAIL
    print("found")
    text = "\n".join(" ".join(str(c) for c in row) for row in g.cells)
    print(text)
    if args.out:
        _write(args.out, write_coloring(grid_to_vertex_coloring(g)))
    return EXIT_OK


def cmd_export_dot(args) -> int:
    d = _load_digraph(args.input)
    _write(args.out, to_dot(d, _label_fn(args.rook_n, d)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rooklab", description="Oriented rook graphs and their dichromatic number.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="write D_N as an arc list")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--verbose", action="store_true", help="print the vertex id -> (a,b) mapping")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("verify", help="run structural checks on an arc list")
    p.add_argument("input")
    p.add_argument("--checks", help=f"comma-separated subset of {','.join(CHECKS)} (default: all)")
    p.add_argument("--rook-n", type=int, help="declare the input to be D_N; labels vertices as (a,b)")
    p.add_argument("--dyadic", action="store_true", help="squares4cycle: sweep all dyadic-distance quadruples")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("dichromatic", help="exact dichromatic number, or a CNF for one k")
    p.add_argument("input")
    p.add_argument("--mode", choices=("native", "sat"), default="native")
    p.add_argument("--k", type=int, help="color count to encode (sat mode)")
    p.add_argument("--out", help="witness coloring file (default: INPUT.coloring in native mode)")
    p.add_argument("--cnf-out", help="DIMACS output (default: INPUT.k<K>.cnf)")
    p.add_argument("--model", help="solver output to decode and validate (sat mode)")
    p.add_argument("--solve", action="store_true", help="run an external SAT solver (sat mode)")
    p.add_argument("--budget", type=int, help="node budget (default: $ROOKLAB_BUDGET or built-in)")
    p.set_defaults(func=cmd_dichromatic)

    p = sub.add_parser("squares", help="find a monochromatic square in a board coloring")
    p.add_argument("coloring")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int)
    p.set_defaults(func=cmd_squares)

    p = sub.add_parser("square-free-search", help="search for a grid coloring without monochromatic squares")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--out", help="write the coloring found")
    p.add_argument("--budget", type=int)
    p.set_defaults(func=cmd_square_free_search)

    p = sub.add_parser("export-dot", help="write an arc list as Graphviz DOT")
    p.add_argument("input")
    p.add_argument("out")
    p.add_argument("--rook-n", type=int)
    p.set_defaults(func=cmd_export_dot)

    p = sub.add_parser("encode-cnf", help="write the acyclic k-coloring CNF")
    p.add_argument("input")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_encode_cnf)

    p = sub.add_parser("decode-model", help="decode and validate a SAT model")
    p.add_argument("input")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--model", required=True)
    p.add_argument("--out", help="write the decoded coloring")
    p.set_defaults(func=cmd_decode_model)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
