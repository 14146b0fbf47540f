"""Perfect forests via shortening a GF(2) expression for the all-ones vector.

A spanning tree's edge vectors form a basis of the even-weight subspace,
so the all-ones vector of an even-order component is the XOR of a unique
subset ``L`` of tree edges.  Whenever some other edge ``e`` of the
component has ``v(e)`` in the span of ``L``, swapping the dependent part
of ``L`` for ``e`` gives a strictly shorter independent expression.  When
no such edge is left, the edges of ``L`` form a perfect forest: odd
degrees because the sum is all-ones, acyclic because ``L`` is independent,
induced because every other edge of the component joins two different
trees of ``L``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Literal

from .gf2 import BitVector, EdgeBasis, edge_vector, gf2_rank, xor_sum
from .graph import (
    Edge,
    Graph,
    SpanningTree,
    build_graph,
    connected_components,
    spanning_tree,
)

Method = Literal["unionfind", "algebra"]


class OddComponentError(ValueError):
    """A connected component has odd order, so no perfect forest exists."""

    def __init__(self, component: tuple[int, ...]) -> None:
        self.component = component
        self.vertex = min(component)
        super().__init__(
            f"component containing vertex {self.vertex} has odd order {len(component)}; "
            "a perfect forest needs every component to have an even number of vertices"
        )


class AlgebraMismatchError(AssertionError):
    """The graph-side dependency answer disagreed with the GF(2) answer."""


class UnionFind:
    def __init__(self, items=()) -> None:
        self.parent = {x: x for x in items}

    def find(self, x):
        parent = self.parent
        root = parent.setdefault(x, x)
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, a, b) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[rb] = ra
        return True


@dataclass(frozen=True)
class Representation:
    """An independent edge set ``edges`` whose vectors XOR to the component's indicator."""

    component: tuple[int, ...]
    edges: tuple[Edge, ...]
    n: int

    @cached_property
    def basis(self) -> EdgeBasis:
        return EdgeBasis.from_members(
            self.n, ((e, edge_vector(*e, self.n)) for e in self.edges)
        )

    def indicator(self) -> BitVector:
        return BitVector.from_coordinates(self.n, self.component)

    def is_valid(self) -> bool:
        vecs = [edge_vector(*e, self.n) for e in self.edges]
        return (
            xor_sum(vecs, self.n) == self.indicator()
            and gf2_rank([v.bits for v in vecs]) == len(vecs)
        )


@dataclass(frozen=True)
class ComponentStats:
    vertices: tuple[int, ...]
    initial_size: int
    final_size: int
    iterations: int
    algebra_checks: int = 0


@dataclass(frozen=True)
class PerfectForest:
    host: Graph = field(repr=False)
    edges: tuple[Edge, ...]
    trees: tuple[tuple[int, ...], ...]
    iterations: int
    components: tuple[ComponentStats, ...] = field(repr=False, default=())

    def tree_edges(self) -> list[list[Edge]]:
        """Edges of each tree, aligned with ``trees``."""
        where = {}
        for k, verts in enumerate(self.trees):
            for v in verts:
                where[v] = k
        out: list[list[Edge]] = [[] for _ in self.trees]
        for e in self.edges:
            out[where[e[0]]].append(e)
        return out


def all_ones_representation(t: SpanningTree, n: int | None = None) -> Representation:
    """The unique subset of tree edges whose vectors XOR to the component indicator.

    Leaves are stripped in reverse BFS order: a vertex keeps its parent
    edge exactly when its degree among the edges chosen so far is even.
    """
    if len(t.component) % 2:
        raise OddComponentError(t.component)
    if n is None:
        n = max(t.component)
    deg = dict.fromkeys(t.component, 0)
    chosen = []
    for v in reversed(t.order[1:]):
        if deg[v] % 2 == 0:
            p, e = t.parent[v]
            chosen.append(e)
            deg[v] += 1
            deg[p] += 1
    # even order forces the root's parity too; a failure here is a bug
    assert deg[t.root] % 2 == 1
    return Representation(t.component, tuple(sorted(chosen)), n)


def _bfs_steps(adj: dict[int, set[int]], s: int, prev: dict[int, int]):
    """BFS from ``s`` one edge at a time, yielding each newly reached vertex (else ``None``)."""
    queue = deque([s])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w in prev:
                yield None
            else:
                prev[w] = u
                queue.append(w)
                yield w


def _forest_path(adj: dict[int, set[int]], i: int, j: int) -> list[Edge] | None:
    """Edges of the ``i``-``j`` path in a forest, or ``None`` if they are not connected.

    Two searches advance one edge at a time in turn, so a short path next
    to a high-degree vertex is found without scanning that vertex's
    whole neighbourhood.
    """
    if i == j:
        return []
    prev_i, prev_j = {i: i}, {j: j}
    sides = [(_bfs_steps(adj, i, prev_i), prev_j), (_bfs_steps(adj, j, prev_j), prev_i)]
    meet = None
    while meet is None:
        progressed = False
        for steps, other in sides:
            w = next(steps, False)
            if w is False:
                continue
            progressed = True
            if w is not None and w in other:
                meet = w
                break
        if not progressed:
            return None
    path = []
    for prev, start in ((prev_i, i), (prev_j, j)):
        v = meet
        while v != start:
            p = prev[v]
            path.append((p, v) if p < v else (v, p))
            v = p
    return path


def _dfs_steps(adj: dict[int, set[int]], s: int, seen: set[int]):
    """DFS from ``s`` filling ``seen``, yielding once per edge examined."""
    seen.add(s)
    stack = [iter(adj[s])]
    while stack:
        w = next(stack[-1], None)
        if w is None:
            stack.pop()
        elif w not in seen:
            seen.add(w)
            stack.append(iter(adj[w]))
        yield


def _component_edges(g: Graph, comp: tuple[int, ...]) -> list[Edge]:
    members = set(comp)
    return [e for e in g.edges if e[0] in members]


def refine_once(
    g: Graph, rep: Representation, method: Method = "unionfind"
) -> Representation | None:
    """One substitution step, or ``None`` when ``rep`` is stable.

    Non-``L`` edges of the component are scanned in ascending order; the
    first whose vector lies in the span of ``L`` is swapped in for the
    members that sum to it.
    """
    in_l = set(rep.edges)
    candidates = [e for e in _component_edges(g, rep.component) if e not in in_l]
    if method == "algebra":
        basis = rep.basis
        for e in candidates:
            dependent = basis.represent(edge_vector(*e, rep.n))
            if dependent is not None:
                return _substitute(rep, e, dependent)
        return None
    if method != "unionfind":
        raise ValueError(f"unknown method {method!r}")
    uf = UnionFind(rep.component)
    adj: dict[int, set[int]] = {v: set() for v in rep.component}
    for a, b in rep.edges:
        uf.union(a, b)
        adj[a].add(b)
        adj[b].add(a)
    for e in candidates:
        if uf.find(e[0]) == uf.find(e[1]):
            path = _forest_path(adj, *e)
            assert path is not None
            return _substitute(rep, e, path)
    return None


def _substitute(rep: Representation, e: Edge, dependent) -> Representation:
    drop = set(dependent)
    assert len(drop) >= 2, "a new edge vector cannot equal a single member"
    kept = [f for f in rep.edges if f not in drop]
    return Representation(rep.component, tuple(sorted(kept + [e])), rep.n)


class _Refiner:
    """Fast refinement of one component.

    Substitutions only split components of the ``L``-forest (the removed
    path leaves pieces, the new edge rejoins just two of them), so an
    edge found independent stays independent for the rest of the run and
    edges removed from ``L`` are independent at once.  A single ascending
    pass therefore reaches the same stable set as rescanning from the
    start after each substitution.
    """

    def __init__(self, g: Graph, rep: Representation, candidates: list[Edge],
                 check_algebra: bool = False) -> None:
        self.g = g
        self.rep = rep
        self.n = rep.n
        self.candidates = candidates
        self.check_algebra = check_algebra
        self.lset = set(rep.edges)
        self.adj: dict[int, set[int]] = {v: set() for v in rep.component}
        for a, b in rep.edges:
            self.adj[a].add(b)
            self.adj[b].add(a)
        self.label: dict[int, int] = {}
        self._next_label = 0
        for v in rep.component:
            if v not in self.label:
                self._flood(v)
        self.iterations = 0
        self.algebra_checks = 0
        self._basis: EdgeBasis | None = None

    def _flood(self, s: int) -> None:
        tag = self._next_label
        self._next_label += 1
        label, adj = self.label, self.adj
        label[s] = tag
        stack = [s]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if label.get(w) != tag:
                    label[w] = tag
                    stack.append(w)

    def _current_basis(self) -> EdgeBasis:
        if self._basis is None:
            self._basis = EdgeBasis.from_members(
                self.n, ((e, edge_vector(*e, self.n)) for e in sorted(self.lset))
            )
        return self._basis

    def _relabel_pieces(self, starts: list[int]) -> None:
        """Give fresh labels to every piece but the largest.

        The pieces are searched side by side one edge at a time and the
        last one still running keeps the old label, so the work is
        proportional to the smaller pieces only.
        """
        running = []
        for v in starts:
            seen: set[int] = set()
            running.append((seen, _dfs_steps(self.adj, v, seen)))
        done = []
        while len(running) > 1:
            still = []
            for seen, steps in running:
                if next(steps, False) is False:
                    done.append(seen)
                else:
                    still.append((seen, steps))
            if not still:
                done.pop()
            running = still
        for seen in done:
            tag = self._next_label
            self._next_label += 1
            for v in seen:
                self.label[v] = tag

    def run(self) -> tuple[Edge, ...]:
        label = self.label
        for e in self.candidates:
            i, j = e
            same = label[i] == label[j]
            path = _forest_path(self.adj, i, j) if same else None
            if self.check_algebra:
                self._cross_check(e, same, path)
            if same:
                self._swap(e, path)
        return tuple(sorted(self.lset))

    def _cross_check(self, e: Edge, same: bool, path: list[Edge] | None) -> None:
        self.algebra_checks += 1
        answer = self._current_basis().represent(edge_vector(*e, self.n))
        if (answer is not None) != same:
            raise AlgebraMismatchError(
                f"edge {e}: span says {answer is not None}, components say {same}"
            )
        if same and set(answer) != set(path):
            raise AlgebraMismatchError(f"edge {e}: combination {answer} != path {path}")

    def _swap(self, e: Edge, path: list[Edge]) -> None:
        adj = self.adj
        for a, b in path:
            self.lset.remove((a, b))
            adj[a].discard(b)
            adj[b].discard(a)
        i, j = e
        self.lset.add(e)
        adj[i].add(j)
        adj[j].add(i)
        self.iterations += 1
        self._basis = None
        # each path vertex roots one piece; e merges the pieces of i and j
        starts = [v for v in dict.fromkeys(w for f in path for w in f) if v != j]
        self._relabel_pieces(starts)
        if self.check_algebra:
            vecs = [edge_vector(*f, self.n) for f in self.lset]
            if xor_sum(vecs, self.n) != self.rep.indicator():
                raise AlgebraMismatchError(f"sum over L is not the indicator after {e}")
            if gf2_rank([v.bits for v in vecs]) != len(vecs):
                raise AlgebraMismatchError(f"L became dependent after {e}")


def find_perfect_forest(
    g: Graph, method: Method = "unionfind", check_algebra: bool = False
) -> PerfectForest:
    """Find a perfect forest of ``g``; every component must have even order.

    ``method="algebra"`` drives :func:`refine_once` with explicit span
    queries, rescanning from the first edge after every substitution.
    The default walks the edges once using forest components.  Both give
    the same forest.  ``check_algebra`` cross-validates the default path
    against span queries at every scanned edge.
    """
    comps = connected_components(g)
    for comp in comps:
        if len(comp) % 2:
            raise OddComponentError(comp)
    owner = {}
    for k, comp in enumerate(comps):
        for v in comp:
            owner[v] = k
    by_comp: list[list[Edge]] = [[] for _ in comps]
    for e in g.edges:
        by_comp[owner[e[0]]].append(e)

    chosen: list[Edge] = []
    stats = []
    for comp, comp_edges in zip(comps, by_comp):
        rep = all_ones_representation(spanning_tree(g, comp), g.n)
        initial = len(rep.edges)
        if method == "algebra":
            steps = 0
            while True:
                nxt = refine_once(g, rep, method="algebra")
                if nxt is None:
                    break
                assert len(nxt.edges) < len(rep.edges)
                rep = nxt
                steps += 1
                if check_algebra:
                    assert rep.is_valid()
            final, checks = rep.edges, 0
        elif method == "unionfind":
            in_l = set(rep.edges)
            refiner = _Refiner(g, rep, [e for e in comp_edges if e not in in_l],
                               check_algebra)
            final = refiner.run()
            steps, checks = refiner.iterations, refiner.algebra_checks
        else:
            raise ValueError(f"unknown method {method!r}")
        if steps > len(comp) or steps > initial - 1:
            raise AssertionError(
                f"{steps} substitutions on a component of order {len(comp)} "
                f"starting from {initial} edges"
            )
        chosen.extend(final)
        stats.append(ComponentStats(comp, initial, len(final), steps, checks))

    edges = tuple(sorted(chosen))
    trees = tuple(connected_components(build_graph(g.n, edges)))
    return PerfectForest(g, edges, trees, sum(s.iterations for s in stats), tuple(stats))


def parity_flip_subgraph(g: Graph, **kwargs) -> Graph:
    """``g`` minus a perfect forest: every vertex degree changes parity."""
    forest = find_perfect_forest(g, **kwargs)
    return g.remove_edges(forest.edges)
