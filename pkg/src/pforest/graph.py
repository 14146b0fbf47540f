"""Simple undirected graphs on vertices 1..n, components, BFS spanning trees."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

Edge = tuple[int, int]


class GraphError(ValueError):
    """Rejected graph input (loop, duplicate edge, endpoint out of range)."""

    def __init__(self, message: str, pair: tuple[int, int] | None = None) -> None:
        super().__init__(message)
        self.pair = pair


def normalize_edge(i: int, j: int) -> Edge:
    return (i, j) if i < j else (j, i)


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph.  Build through :func:`build_graph`."""

    n: int
    edges: tuple[Edge, ...]
    adjacency: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)
    _edge_set: frozenset[Edge] = field(repr=False, compare=False)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        """Neighbours of ``v`` in ascending order."""
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, i: int, j: int) -> bool:
        return normalize_edge(i, j) in self._edge_set

    def remove_edges(self, edges: Iterable[Edge]) -> Graph:
        drop = {normalize_edge(*e) for e in edges}
        missing = drop - self._edge_set
        if missing:
            raise GraphError(f"edge {min(missing)} not in graph", min(missing))
        return build_graph(self.n, [e for e in self.edges if e not in drop])


def build_graph(n: int, pairs: Iterable[tuple[int, int]]) -> Graph:
    """Validate and normalize an edge list into a :class:`Graph`.

    Pairs may be given in either orientation.  Loops, repeated edges and
    endpoints outside ``1..n`` raise :class:`GraphError`.
    """
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    seen: set[Edge] = set()
    for i, j in pairs:
        if i == j:
            raise GraphError(f"self-loop ({i}, {j})", (i, j))
        if not (1 <= i <= n and 1 <= j <= n):
            raise GraphError(f"edge ({i}, {j}) has an endpoint outside 1..{n}", (i, j))
        e = normalize_edge(i, j)
        if e in seen:
            raise GraphError(f"duplicate edge ({i}, {j})", (i, j))
        seen.add(e)
    edges = tuple(sorted(seen))
    adj: list[list[int]] = [[] for _ in range(n + 1)]
    for i, j in edges:
        adj[i].append(j)
        adj[j].append(i)
    for nbrs in adj:
        nbrs.sort()
    return Graph(n, edges, tuple(tuple(a) for a in adj), frozenset(seen))


def complete_graph(n: int) -> Graph:
    return build_graph(n, [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)])


def cycle_graph(n: int) -> Graph:
    return build_graph(n, [(i, i % n + 1) for i in range(1, n + 1)])


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(1, n)])


def connected_components(g: Graph) -> list[tuple[int, ...]]:
    """Vertex sets of the components, each sorted, ordered by smallest vertex."""
    label = [0] * (g.n + 1)
    parts = []
    for s in g.vertices:
        if label[s]:
            continue
        label[s] = s
        part = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if not label[w]:
                    label[w] = s
                    part.append(w)
                    queue.append(w)
        parts.append(tuple(sorted(part)))
    return parts


class DisconnectedComponentError(ValueError):
    pass


@dataclass(frozen=True)
class SpanningTree:
    """A rooted spanning tree of one connected component.

    ``order`` lists the component's vertices in BFS discovery order, so
    every parent precedes its children.
    """

    component: tuple[int, ...]
    root: int
    parent: dict[int, tuple[int, Edge]]
    edges: tuple[Edge, ...]
    order: tuple[int, ...]
    depth: dict[int, int] = field(repr=False)


def spanning_tree(g: Graph, component: Iterable[int]) -> SpanningTree:
    """BFS tree from the smallest vertex, visiting neighbours in ascending order."""
    comp = tuple(sorted(component))
    if not comp:
        raise DisconnectedComponentError("empty component")
    members = set(comp)
    root = comp[0]
    parent: dict[int, tuple[int, Edge]] = {}
    depth = {root: 0}
    order = [root]
    edges = []
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if w in depth:
                continue
            if w not in members:
                raise DisconnectedComponentError(
                    f"vertex {w} is adjacent to the component but not in it"
                )
            depth[w] = depth[u] + 1
            e = normalize_edge(u, w)
            parent[w] = (u, e)
            edges.append(e)
            order.append(w)
            queue.append(w)
    if len(order) != len(comp):
        missing = min(members.difference(depth))
        raise DisconnectedComponentError(f"vertex {missing} unreachable from {root}")
    return SpanningTree(comp, root, parent, tuple(edges), tuple(order), depth)


def tree_path(t: SpanningTree, i: int, j: int) -> list[Edge]:
    """Edges of the unique ``i``-``j`` path: up from ``i``, then down to ``j``."""
    for v in (i, j):
        if v not in t.depth:
            raise ValueError(f"vertex {v} not in the tree's component")
    up: list[Edge] = []
    down: list[Edge] = []
    a, b = i, j
    while t.depth[a] > t.depth[b]:
        a, e = t.parent[a]
        up.append(e)
    while t.depth[b] > t.depth[a]:
        b, e = t.parent[b]
        down.append(e)
    while a != b:
        a, ea = t.parent[a]
        b, eb = t.parent[b]
        up.append(ea)
        down.append(eb)
    return up + down[::-1]


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph on ``s`` relabelled to ``1..|s|`` in ascending order, plus the relabel map."""
    verts = sorted(set(s))
    relabel = {v: k for k, v in enumerate(verts, start=1)}
    pairs = [
        (relabel[i], relabel[j]) for i, j in g.edges if i in relabel and j in relabel
    ]
    return build_graph(len(verts), pairs), relabel
