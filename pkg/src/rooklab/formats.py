"""Text file formats.

Arc list::

    digraph <n> <m>
    u v            (m lines, 0-based ids)

Coloring::

    coloring <n> <k>
    v c            (n lines, every vertex exactly once)

DOT export is write-only.  Blank lines and lines starting with ``#`` are
ignored by the parsers.
"""

from __future__ import annotations

from typing import Callable, Iterator, Optional

from rooklab.dicolor import Coloring
from rooklab.digraph import Digraph

__all__ = [
    "FormatError",
    "write_arc_list",
    "parse_arc_list",
    "write_coloring",
    "parse_coloring",
    "to_dot",
]


class FormatError(ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def _content_lines(text: str) -> Iterator[tuple[int, list[str]]]:
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if line and not line.startswith("#"):
            yield lineno, line.split()


def _ints(lineno: int, fields: list[str], count: int) -> list[int]:
    if len(fields) != count:
        raise FormatError(lineno, f"expected {count} fields, got {len(fields)}")
    try:
        return [int(f) for f in fields]
    except ValueError:
        raise FormatError(lineno, f"non-integer field in {' '.join(fields)!r}") from None


def _header(lines, keyword: str) -> tuple[int, int, int]:
    try:
        lineno, fields = next(lines)
    except StopIteration:
        raise FormatError(0, f"empty file, expected '{keyword} ...' header") from None
    if fields[0] != keyword:
        raise FormatError(lineno, f"expected '{keyword}' header, got {fields[0]!r}")
    first, second = _ints(lineno, fields[1:], 2)
    if first < 0 or second < 0:
        raise FormatError(lineno, "header values must be nonnegative")
    return lineno, first, second


def write_arc_list(d: Digraph) -> str:
    lines = [f"digraph {d.n} {d.num_arcs}"]
    lines.extend(f"{u} {v}" for u, v in d.arcs)
    return "\n".join(lines) + "\n"


def parse_arc_list(text: str) -> Digraph:
    lines = _content_lines(text)
    _, n, m = _header(lines, "digraph")
    arcs = []
    seen = set()
    last = 0
    for lineno, fields in lines:
        u, v = _ints(lineno, fields, 2)
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(lineno, f"vertex id out of range [0,{n})")
        if u == v:
            raise FormatError(lineno, f"self-loop at {u}")
        if (u, v) in seen:
            raise FormatError(lineno, f"duplicate arc {u} {v}")
        seen.add((u, v))
        arcs.append((u, v))
        last = lineno
    if len(arcs) != m:
        raise FormatError(last, f"header declares {m} arcs, found {len(arcs)}")
    return Digraph(n, arcs)


def write_coloring(c: Coloring) -> str:
    lines = [f"coloring {len(c)} {c.k}"]
    lines.extend(f"{v} {col}" for v, col in enumerate(c.colors))
    return "\n".join(lines) + "\n"


def parse_coloring(text: str) -> Coloring:
    lines = _content_lines(text)
    hdr, n, k = _header(lines, "coloring")
    colors: list[Optional[int]] = [None] * n
    last = hdr
    for lineno, fields in lines:
        v, c = _ints(lineno, fields, 2)
        if not 0 <= v < n:
            raise FormatError(lineno, f"vertex {v} out of range [0,{n})")
        if not 0 <= c < k:
            raise FormatError(lineno, f"color {c} out of range [0,{k})")
        if colors[v] is not None:
            raise FormatError(lineno, f"vertex {v} colored twice")
        colors[v] = c
        last = lineno
    missing = [v for v, c in enumerate(colors) if c is None]
    if missing:
        raise FormatError(last, f"{len(missing)} vertices uncolored (first: {missing[0]})")
    return Coloring(tuple(colors), k)  # type: ignore[arg-type]


def to_dot(d: Digraph, label: Optional[Callable[[int], str]] = None, name: str = "D") -> str:
    lines = [f"digraph {name} {{"]
    for v in range(d.n):
        text = label(v) if label else str(v)
        lines.append(f'  {v} [label="{text}"];')
    lines.extend(f"  {u} -> {v};" for u, v in d.arcs)
    lines.append("}")
    return "\n".join(lines) + "\n"
