"""Edge-list text format and DOT export.

Format::

    # comment
    <n> [loops]
    u v
    ...

One edge per line, whitespace separated, ``#`` starts a comment.  Output is
normalised: each edge written once as ``u v`` with ``u <= v``, sorted.
"""
from __future__ import annotations

from .errors import GraphError, ParseError
from .graph import Graph, from_edge_list


def serialize(g: Graph) -> str:
    header = f"{g.n} loops" if g.allows_loops else str(g.n)
    lines = [header] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def parse(text: str) -> Graph:
    header = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if header is None:
            if len(tokens) > 2 or (len(tokens) == 2 and tokens[1] != "loops"):
                raise ParseError(f"line {lineno}: malformed header {line!r}")
            header = (_int(tokens[0], lineno), len(tokens) == 2)
            continue
        if len(tokens) != 2:
            raise ParseError(f"line {lineno}: expected 'u v', got {line!r}")
        edges.append((_int(tokens[0], lineno), _int(tokens[1], lineno)))
    if header is None:
        raise ParseError("missing header line")
    n, loops = header
    try:
        return from_edge_list(n, edges, allow_loops=loops)
    except GraphError as exc:
        raise ParseError(str(exc)) from exc


def _int(token: str, lineno: int) -> int:
    try:
        value = int(token)
    except ValueError:
        raise ParseError(f"line {lineno}: bad token {token!r}") from None
    if value < 0:
        raise ParseError(f"line {lineno}: negative value {value}")
    return value


def to_dot(g: Graph, name: str = "G", labels: list[str] | None = None) -> str:
    """Undirected DOT document; loops become self-edges."""
    out = [f"graph {_dot_id(name)} {{"]
    for u in range(g.n):
        if labels is not None:
            out.append(f'  {u} [label="{labels[u]}"];')
        else:
            out.append(f"  {u};")
    out.extend(f"  {u} -- {v};" for u, v in g.edges())
    out.append("}")
    return "\n".join(out) + "\n"


def _dot_id(name: str) -> str:
    if name.isidentifier():
        return name
    return '"' + name.replace('"', r"\"") + '"'
