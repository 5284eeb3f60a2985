"""Plain-text interchange formats.

Graph::

    p <num_vertices> <num_edges>
    u v            (0-indexed, u < v, one edge per line)

Digraph::

    d <num_vertices> <num_arcs>
    tail head

Colourings are ``vertex colour`` lines, vertex roles are ``vertex kind ...``
lines and star forest decompositions are ``arc_index class`` lines.  Lines
starting with ``#`` are comments.
"""

from __future__ import annotations

from typing import Mapping, Sequence

from .exceptions import InvalidGraphError
from .graph import Branch, Graph, Inner, Middle, VertexRole
from .star_forest import Digraph, StarForestDecomposition


def _lines(text: str):
    for no, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if line and not line.startswith("#"):
            yield no, line.split()


def _ints(no, fields, count):
    if len(fields) != count:
        raise InvalidGraphError(f"line {no}: expected {count} fields, got {len(fields)}")
    try:
        return [int(x) for x in fields]
    except ValueError:
        raise InvalidGraphError(f"line {no}: expected integers, got {' '.join(fields)!r}") from None


def _parse_pairs(text: str, tag: str):
    rows = list(_lines(text))
    if not rows or rows[0][1][0] != tag:
        raise InvalidGraphError(f"missing '{tag} <vertices> <count>' header")
    no, head = rows[0]
    n, m = _ints(no, head[1:], 2)
    pairs = [tuple(_ints(no, f, 2)) for no, f in rows[1:]]
    if len(pairs) != m:
        raise InvalidGraphError(f"header announces {m} lines, found {len(pairs)}")
    return n, pairs


def format_graph(g: Graph) -> str:
    out = [f"p {g.n} {g.num_edges}"]
    out.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(out) + "\n"


def parse_graph(text: str) -> Graph:
    n, pairs = _parse_pairs(text, "p")
    return Graph(n, pairs)


def format_digraph(d: Digraph) -> str:
    out = [f"d {d.n} {len(d.arcs)}"]
    out.extend(f"{t} {h}" for t, h in d.arcs)
    return "\n".join(out) + "\n"


def parse_digraph(text: str) -> Digraph:
    n, pairs = _parse_pairs(text, "d")
    try:
        return Digraph(n, tuple(pairs))
    except ValueError as exc:
        raise InvalidGraphError(str(exc)) from None


def format_colouring(colour: Sequence[int] | Mapping[int, int]) -> str:
    items = sorted(colour.items()) if isinstance(colour, Mapping) else enumerate(colour)
    return "".join(f"{v} {c}\n" for v, c in items)


def parse_colouring(text: str) -> dict[int, int]:
    out: dict[int, int] = {}
    for no, fields in _lines(text):
        v, c = _ints(no, fields, 2)
        if v in out:
            raise InvalidGraphError(f"line {no}: vertex {v} coloured twice")
        out[v] = c
    return out


def format_roles(roles: Sequence[VertexRole]) -> str:
    out = []
    for x, r in enumerate(roles):
        if isinstance(r, Branch):
            out.append(f"{x} branch {r.vertex}")
        elif isinstance(r, Inner):
            out.append(f"{x} inner {r.edge} {r.host} {r.depth}")
        else:
            out.append(f"{x} middle {r.edge}")
    return "\n".join(out) + "\n" if out else ""


def parse_roles(text: str) -> list[VertexRole]:
    kinds = {"branch": (Branch, 1), "inner": (Inner, 3), "middle": (Middle, 1)}
    out: list[VertexRole] = []
    for no, fields in _lines(text):
        if len(fields) < 2 or fields[1] not in kinds:
            raise InvalidGraphError(f"line {no}: unknown role line {' '.join(fields)!r}")
        cls, arity = kinds[fields[1]]
        x, *args = _ints(no, [fields[0]] + fields[2:], arity + 1)
        if x != len(out):
            raise InvalidGraphError(f"line {no}: roles must be listed in vertex order")
        out.append(cls(*args))
    return out


def format_decomposition(dec: StarForestDecomposition) -> str:
    return "".join(f"{i} {c}\n" for i, c in enumerate(dec.labels))


def parse_decomposition(text: str) -> StarForestDecomposition:
    labels = []
    for no, fields in _lines(text):
        i, c = _ints(no, fields, 2)
        if i != len(labels):
            raise InvalidGraphError(f"line {no}: arcs must be listed in order")
        labels.append(c)
    return StarForestDecomposition(tuple(labels))
