"""Line-oriented text formats for graphs and colorings.

Graph files::

    c optional comment
    p mgraph <n> <pairs> <t>
    e <u> <v> <mu>

with ``1 <= u < v <= n`` and ``1 <= mu <= t``.  Colorings are written one
vertex per line as ``v <vertex> <color>``.
"""

from __future__ import annotations

from .graph import GraphError, MultiGraph


class ParseError(ValueError):
    def __init__(self, message: str, lineno: int | None = None):
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
        self.lineno = lineno


def _ints(fields, lineno):
    try:
        return [int(f) for f in fields]
    except ValueError:
        raise ParseError(f"expected integers, got {' '.join(fields)!r}", lineno) from None


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line == "c" or line.startswith("c "):
            continue
        yield lineno, line.split()


def parse_graph(text: str) -> MultiGraph:
    header = None
    mult: dict[tuple[int, int], int] = {}
    for lineno, fields in _content_lines(text):
        kind = fields[0]
        if kind == "p":
            if header is not None:
                raise ParseError("second header line", lineno)
            if len(fields) != 5 or fields[1] != "mgraph":
                raise ParseError("header must read 'p mgraph <n> <pairs> <t>'", lineno)
            n, p, t = _ints(fields[2:], lineno)
            if n < 0 or p < 0 or t < 1:
                raise ParseError(f"bad header values n={n} pairs={p} t={t}", lineno)
            header = (n, p, t)
        elif kind == "e":
            if header is None:
                raise ParseError("edge line before header", lineno)
            if len(fields) != 4:
                raise ParseError("edge line must read 'e <u> <v> <mu>'", lineno)
            u, v, m = _ints(fields[1:], lineno)
            n, _, t = header
            if not 1 <= u < v <= n:
                raise ParseError(f"pair ({u},{v}) must satisfy 1 <= u < v <= {n}", lineno)
            if not 1 <= m <= t:
                raise ParseError(f"pair ({u},{v}) multiplicity {m} outside 1..{t}", lineno)
            if (u, v) in mult:
                raise ParseError(f"pair ({u},{v}) listed twice", lineno)
            mult[(u, v)] = m
        else:
            raise ParseError(f"unknown line type {kind!r}", lineno)
    if header is None:
        raise ParseError("missing 'p mgraph' header")
    n, p, _ = header
    if len(mult) != p:
        raise ParseError(f"header announces {p} pairs, found {len(mult)}")
    try:
        return MultiGraph(n, mult)
    except GraphError as exc:
        raise ParseError(str(exc)) from None


def serialize_graph(G: MultiGraph, t: int | None = None, comments: tuple[str, ...] = ()) -> str:
    if t is None:
        t = max(1, G.max_multiplicity)
    if G.max_multiplicity > t:
        raise GraphError(f"graph has multiplicity {G.max_multiplicity} > declared t={t}")
    lines = [f"c {c}" for c in comments]
    lines.append(f"p mgraph {G.n} {G.num_pairs} {t}")
    lines.extend(f"e {u} {v} {m}" for u, v, m in G.pairs())
    return "\n".join(lines) + "\n"


def read_graph(path) -> MultiGraph:
    with open(path, encoding="utf-8") as f:
        return parse_graph(f.read())


def write_graph(path, G: MultiGraph, t: int | None = None) -> None:
    with open(path, "w", encoding="utf-8") as f:
        f.write(serialize_graph(G, t))


def serialize_coloring(assignment) -> str:
    return "".join(f"v {v} {c}\n" for v, c in sorted(assignment.items()))


def parse_coloring(text: str) -> dict[int, int]:
    out: dict[int, int] = {}
    for lineno, fields in _content_lines(text):
        if fields[0] != "v" or len(fields) != 3:
            raise ParseError("coloring line must read 'v <vertex> <color>'", lineno)
        v, c = _ints(fields[1:], lineno)
        if v in out:
            raise ParseError(f"vertex {v} colored twice", lineno)
        out[v] = c
    return out
