"""Brute-force ground truth over small graphs.

``enumerate_perfect_forests`` walks every edge subset; the exhaustive
checks sweep every labelled graph on a handful of vertices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .forest import OddComponentError, find_perfect_forest
from .graph import Edge, Graph, build_graph, connected_components
from .verify import verify_perfect_forest, verify_parity_flip

DEFAULT_EDGE_CAP = 24
DEFAULT_VERTEX_CAP = 6


class OracleInputError(ValueError):
    pass


@dataclass(frozen=True)
class OracleReport:
    graph: Graph
    forests: list[tuple[Edge, ...]]
    subsets_scanned: int


def _degree_parity_table(g: Graph) -> np.ndarray:
    """Entry ``mask`` holds the odd-degree vertex set of edge subset ``mask``.

    Bit ``k`` of ``mask`` selects ``g.edges[k]``; bit ``v - 1`` of an entry
    flags vertex ``v``.
    """
    dtype = np.uint8 if g.n <= 8 else np.uint16 if g.n <= 16 else np.uint32 if g.n <= 32 else np.uint64
    table = np.zeros(1, dtype=dtype)
    for a, b in g.edges:
        table = np.concatenate([table, table ^ dtype((1 << (a - 1)) | (1 << (b - 1)))])
    return table


def enumerate_perfect_forests(g: Graph, cap: int = DEFAULT_EDGE_CAP) -> OracleReport:
    """Every perfect forest of ``g``, in ascending bitmask order over ``g.edges``.

    All ``2**m`` subsets are swept; only those with every degree odd can
    pass the verifier, so the verifier is run on exactly those.
    """
    if g.m > cap:
        raise OracleInputError(f"{g.m} edges exceeds the enumeration cap of {cap}")
    if g.n > 64:
        raise OracleInputError(f"{g.n} vertices is too many for the parity table")
    if g.n == 0:
        return OracleReport(g, [()], 1)
    table = _degree_parity_table(g)
    full = (1 << g.n) - 1
    forests = []
    for mask in np.flatnonzero(table == table.dtype.type(full)):
        mask = int(mask)
        subset = tuple(e for k, e in enumerate(g.edges) if mask >> k & 1)
        if not verify_perfect_forest(g, subset):
            forests.append(subset)
    return OracleReport(g, forests, len(table))


def graph_from_mask(n: int, mask: int) -> Graph:
    pairs = list(combinations(range(1, n + 1), 2))
    return build_graph(n, [p for k, p in enumerate(pairs) if mask >> k & 1])


def _is_connected(n: int, pairs: list[tuple[int, int]], mask: int) -> bool:
    if n <= 1:
        return True
    seen = 1
    frontier = 1
    adj = [0] * n
    for k, (a, b) in enumerate(pairs):
        if mask >> k & 1:
            adj[a - 1] |= 1 << (b - 1)
            adj[b - 1] |= 1 << (a - 1)
    while frontier:
        grow = 0
        v = 0
        while frontier:
            if frontier & 1:
                grow |= adj[v]
            frontier >>= 1
            v += 1
        frontier = grow & ~seen
        seen |= grow
    return seen == (1 << n) - 1


def connected_labeled_graphs(n: int):
    """Yield every connected graph on vertices ``1..n``, by ascending edge mask."""
    pairs = list(combinations(range(1, n + 1), 2))
    for mask in range(1 << len(pairs)):
        if _is_connected(n, pairs, mask):
            yield build_graph(n, [p for k, p in enumerate(pairs) if mask >> k & 1])


@dataclass
class CheckSummary:
    n: int
    graphs_checked: int = 0
    failures: list[str] = field(default_factory=list)
    max_iterations: int = 0
    converse_graphs_checked: int = 0
    converse_failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures and not self.converse_failures


def exhaustive_theorem_check(
    n: int,
    vertex_cap: int = DEFAULT_VERTEX_CAP,
    check_algebra: bool = False,
    converse: bool = True,
) -> CheckSummary:
    """Find and verify a perfect forest on every connected labelled graph of order ``n``.

    With ``converse`` set, every connected graph of each odd order below
    ``n`` (at most 5) is also confirmed to have no perfect forest at all.
    """
    if n < 2 or n % 2:
        raise OracleInputError(f"n must be a positive even number, got {n}")
    if n > vertex_cap:
        raise OracleInputError(f"n = {n} exceeds the vertex cap of {vertex_cap}")
    summary = CheckSummary(n)
    for g in connected_labeled_graphs(n):
        summary.graphs_checked += 1
        try:
            forest = find_perfect_forest(g, check_algebra=check_algebra)
        except (OddComponentError, AssertionError) as exc:
            summary.failures.append(f"{g.edges}: {exc}")
            continue
        bad = verify_perfect_forest(g, forest.edges)
        if bad:
            summary.failures.append(f"{g.edges}: {'; '.join(map(str, bad))}")
        flip = verify_parity_flip(g, g.remove_edges(forest.edges))
        if flip:
            summary.failures.append(f"{g.edges}: {'; '.join(map(str, flip))}")
        summary.max_iterations = max(summary.max_iterations, forest.iterations)
    if converse:
        for m in range(1, min(n, 6), 2):
            for g in connected_labeled_graphs(m):
                summary.converse_graphs_checked += 1
                report = enumerate_perfect_forests(g)
                if report.forests:
                    summary.converse_failures.append(
                        f"odd order {m}, {g.edges}: found {report.forests[0]}"
                    )
    return summary


def even_components(g: Graph) -> bool:
    return all(len(c) % 2 == 0 for c in connected_components(g))
