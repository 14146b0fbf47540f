"""Edge-list and forest document formats.

Edge list::

    # comment lines start with '#'
    4 4
    1 2
    2 3
    3 4
    1 4

Header ``n m``, then ``m`` lines ``i j`` with ``1 <= i < j <= n``.
Output is ASCII with LF endings and single spaces.
"""

from __future__ import annotations

import json
import re

from .forest import PerfectForest
from .graph import Edge, Graph, GraphError, build_graph


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int = 1) -> None:
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


_TOKEN = re.compile(r"\S+")


def _content_lines(text: str):
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield lineno, line


def _ints(lineno: int, line: str, count: int, what: str) -> list[tuple[int, int]]:
    """``(value, column)`` for each of exactly ``count`` integer tokens."""
    tokens = list(_TOKEN.finditer(line))
    if len(tokens) != count:
        col = tokens[count].start() + 1 if len(tokens) > count else len(line) + 1
        raise ParseError(f"{what}: expected {count} integers, found {len(tokens)}", lineno, col)
    values = []
    for tok in tokens:
        if not tok.group().isdigit():
            raise ParseError(f"{what}: {tok.group()!r} is not a non-negative integer",
                             lineno, tok.start() + 1)
        values.append((int(tok.group()), tok.start() + 1))
    return values


def parse_edge_list(text: str) -> Graph:
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("missing 'n m' header", 1)
    lineno, header = lines[0]
    (n, _), (m, _) = _ints(lineno, header, 2, "header")
    body = lines[1:]
    if len(body) != m:
        where = body[m][0] if len(body) > m else (body[-1][0] + 1 if body else lineno + 1)
        raise ParseError(f"header declares {m} edges, found {len(body)}", where)
    pairs = []
    seen: dict[Edge, int] = {}
    for lineno, line in body:
        (i, ci), (j, cj) = _ints(lineno, line, 2, "edge")
        if i == j:
            raise ParseError(f"self-loop ({i}, {j})", lineno, ci)
        for v, c in ((i, ci), (j, cj)):
            if not 1 <= v <= n:
                raise ParseError(f"vertex {v} outside 1..{n}", lineno, c)
        if i > j:
            raise ParseError(f"pair ({i}, {j}) must be written with i < j", lineno, ci)
        if (i, j) in seen:
            raise ParseError(f"duplicate edge ({i}, {j}), first on line {seen[(i, j)]}", lineno, ci)
        seen[(i, j)] = lineno
        pairs.append((i, j))
    try:
        return build_graph(n, pairs)
    except GraphError as exc:  # pragma: no cover - every case is caught above
        raise ParseError(str(exc), lineno) from exc


def format_edge_list(g: Graph) -> str:
    out = [f"{g.n} {g.m}"]
    out.extend(f"{i} {j}" for i, j in g.edges)
    return "\n".join(out) + "\n"


def forest_to_dict(forest: PerfectForest) -> dict:
    return {
        "n": forest.host.n,
        "component_count": len(forest.components),
        "iterations": forest.iterations,
        "trees": [
            {"vertices": list(verts), "edges": [list(e) for e in edges]}
            for verts, edges in zip(forest.trees, forest.tree_edges())
        ],
    }


def format_forest(forest: PerfectForest, fmt: str = "text") -> str:
    doc = forest_to_dict(forest)
    if fmt == "structured":
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"
    out = [
        f"perfect-forest n={doc['n']} trees={len(doc['trees'])} "
        f"components={doc['component_count']} iterations={doc['iterations']}"
    ]
    for k, tree in enumerate(doc["trees"], start=1):
        out.append(f"tree {k} vertices: " + " ".join(map(str, tree["vertices"])))
        out.append(f"tree {k} edges: " + " ".join(f"{a}-{b}" for a, b in tree["edges"]))
    return "\n".join(out) + "\n"


def parse_forest(text: str) -> list[Edge]:
    """Edges of a forest document in either output format."""
    if text.lstrip().startswith("{"):
        try:
            doc = json.loads(text)
            return [tuple(e) for tree in doc["trees"] for e in tree["edges"]]
        except (ValueError, KeyError, TypeError) as exc:
            raise ParseError(f"bad structured forest: {exc}", 1) from exc
    edges: list[Edge] = []
    saw_header = False
    for lineno, line in _content_lines(text):
        if line.startswith("perfect-forest"):
            saw_header = True
            continue
        head, sep, rest = line.partition(":")
        words = head.split()
        if not sep or len(words) != 3 or words[0] != "tree":
            raise ParseError(f"unrecognised line {line!r}", lineno)
        if words[2] != "edges":
            continue
        for tok in rest.split():
            a, dash, b = tok.partition("-")
            if not (dash and a.isdigit() and b.isdigit()):
                raise ParseError(f"bad edge token {tok!r}", lineno, line.index(tok) + 1)
            edges.append((int(a), int(b)))
    if not saw_header:
        raise ParseError("missing 'perfect-forest' header line", 1)
    return edges
