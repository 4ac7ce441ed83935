"""Text and JSON graph files.

Text format::

    # comment
    n 3
    r 2
    e 0 1 1
    e 0 1 2

JSON format: ``{"n": 3, "r": 2, "edges": [[0, 1, 1], [0, 1, 2]]}``.
"""

from __future__ import annotations

import json
from pathlib import Path

from .errors import DuplicateEdge, GraphSyntaxError, Loop
from .graphcore import ColoredMultigraph


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise GraphSyntaxError(f"expected an integer, got {tok!r}", lineno) from None


def parse_text(text: str) -> ColoredMultigraph:
    n = r = None
    triples: list[tuple[int, int, int]] = []
    seen: set[tuple[int, int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        key = tok[0]
        if key in ("n", "r"):
            if len(tok) != 2:
                raise GraphSyntaxError(f"'{key}' takes one value", lineno)
            if (n if key == "n" else r) is not None:
                raise GraphSyntaxError(f"duplicate '{key}' line", lineno)
            if key == "n":
                n = _int(tok[1], lineno)
            else:
                r = _int(tok[1], lineno)
        elif key == "e":
            if n is None or r is None:
                raise GraphSyntaxError("edge before 'n' and 'r' lines", lineno)
            if len(tok) != 4:
                raise GraphSyntaxError("edge line needs 'e u v c'", lineno)
            u, v, c = (_int(t, lineno) for t in tok[1:])
            if u == v:
                raise Loop(f"line {lineno}: loop at pair ({u}, {v})")
            if u > v:
                raise GraphSyntaxError(f"edge ({u}, {v}) must be written with u < v", lineno)
            if (u, v, c) in seen:
                raise DuplicateEdge(f"line {lineno}: duplicate edge ({u}, {v}) color {c}")
            seen.add((u, v, c))
            triples.append((u, v, c))
        else:
            raise GraphSyntaxError(f"unknown record {key!r}", lineno)
    if n is None or r is None:
        raise GraphSyntaxError("missing 'n' or 'r' line")
    return ColoredMultigraph.from_edges(n, r, triples)


def serialize_text(g: ColoredMultigraph) -> str:
    lines = [f"n {g.n}", f"r {g.r}"]
    lines += [f"e {u} {v} {c}" for u, v, c in g.triples()]
    return "\n".join(lines) + "\n"


def to_dict(g: ColoredMultigraph) -> dict:
    return {"n": g.n, "r": g.r, "edges": [list(t) for t in g.triples()]}


def from_dict(d: dict) -> ColoredMultigraph:
    try:
        n, r, edges = d["n"], d["r"], d.get("edges", [])
    except (KeyError, TypeError) as exc:
        raise GraphSyntaxError(f"JSON graph needs 'n' and 'r': {exc}") from None
    if not all(isinstance(x, int) for x in (n, r)):
        raise GraphSyntaxError("'n' and 'r' must be integers")
    seen = set()
    triples = []
    for i, e in enumerate(edges):
        if not (isinstance(e, list) and len(e) == 3 and all(isinstance(x, int) for x in e)):
            raise GraphSyntaxError(f"edge #{i} must be [u, v, c], got {e!r}")
        u, v, c = e
        if u == v:
            raise Loop(f"edge #{i}: loop at pair ({u}, {v})")
        if u > v:
            raise GraphSyntaxError(f"edge #{i} ({u}, {v}) must have u < v")
        if (u, v, c) in seen:
            raise DuplicateEdge(f"edge #{i}: duplicate edge ({u}, {v}) color {c}")
        seen.add((u, v, c))
        triples.append((u, v, c))
    return ColoredMultigraph.from_edges(n, r, triples)


def parse_json(text: str) -> ColoredMultigraph:
    try:
        d = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphSyntaxError(exc.msg, exc.lineno) from None
    return from_dict(d)


def serialize_json(g: ColoredMultigraph) -> str:
    return json.dumps(to_dict(g))


def loads(text: str) -> ColoredMultigraph:
    """Parse either format, sniffing JSON by a leading brace."""
    if text.lstrip().startswith("{"):
        return parse_json(text)
    return parse_text(text)


def load(path) -> ColoredMultigraph:
    return loads(Path(path).read_text())


def dump(g: ColoredMultigraph, path, fmt: str | None = None) -> None:
    path = Path(path)
    if fmt is None:
        fmt = "json" if path.suffix == ".json" else "text"
    path.write_text(serialize_json(g) if fmt == "json" else serialize_text(g))
