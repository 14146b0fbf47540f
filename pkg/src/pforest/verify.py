"""Definitional checks for perfect forests and parity-flip subgraphs.

Nothing here touches the GF(2) machinery or the finder; every check is
recomputed from the graph and the edge subset alone.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graph import Edge, Graph

NOT_SPANNING = "NotSpanning"  # unreachable: an uncovered vertex has degree 0 and shows as EvenDegree
CONTAINS_CYCLE = "ContainsCycle"
EVEN_DEGREE = "EvenDegree"
NOT_INDUCED = "NotInduced"
SAME_PARITY = "SameParity"
EDGE_BOUND = "EdgeBound"


class VerificationInputError(ValueError):
    pass


@dataclass(frozen=True)
class Violation:
    kind: str
    detail: str
    vertex: int | None = None
    edge: Edge | None = None
    tree: tuple[int, ...] | None = None

    def __str__(self) -> str:
        return f"{self.kind}: {self.detail}"


def _root(parent: list[int], x: int) -> int:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def verify_perfect_forest(g: Graph, f: Iterable[Edge]) -> list[Violation]:
    """All violations of the perfect-forest definition; empty means valid.

    Order: cycle-closing edges (ascending), even-degree vertices
    (ascending), then non-tree edges of ``g`` inside a tree (ascending).
    """
    chosen = set()
    for a, b in f:
        e = (a, b) if a < b else (b, a)
        if not g.has_edge(*e):
            raise VerificationInputError(f"edge {e} is not an edge of the graph")
        if e in chosen:
            raise VerificationInputError(f"edge {e} listed twice")
        chosen.add(e)
    edges = sorted(chosen)
    out: list[Violation] = []

    parent = list(range(g.n + 1))
    for a, b in edges:
        ra, rb = _root(parent, a), _root(parent, b)
        if ra == rb:
            out.append(Violation(CONTAINS_CYCLE, f"edge {a}-{b} closes a cycle", edge=(a, b)))
        else:
            parent[max(ra, rb)] = min(ra, rb)

    deg = [0] * (g.n + 1)
    for a, b in edges:
        deg[a] += 1
        deg[b] += 1
    for v in range(1, g.n + 1):
        if deg[v] % 2 == 0:
            out.append(Violation(EVEN_DEGREE, f"vertex {v} has degree {deg[v]}", vertex=v))

    roots = [_root(parent, v) for v in range(g.n + 1)]
    members: dict[int, list[int]] = {}
    for v in range(1, g.n + 1):
        members.setdefault(roots[v], []).append(v)
    for a, b in g.edges:
        if roots[a] == roots[b] and (a, b) not in chosen:
            tree = tuple(members[roots[a]])
            out.append(Violation(
                NOT_INDUCED,
                f"edge {a}-{b} joins two vertices of tree {set(tree)} but is not in the forest",
                edge=(a, b), tree=tree,
            ))
    return out


def verify_parity_flip(g: Graph, h: Graph) -> list[Violation]:
    """Violations of ``h`` flipping every degree parity of ``g`` within the edge bound."""
    if h.n != g.n:
        raise VerificationInputError(f"vertex sets differ: {g.n} vs {h.n} vertices")
    extra = [e for e in h.edges if not g.has_edge(*e)]
    if extra:
        raise VerificationInputError(f"edge {extra[0]} of H is not in G")
    out = []
    for v in range(1, g.n + 1):
        dg, dh = g.degree(v), h.degree(v)
        if dg % 2 == dh % 2:
            out.append(Violation(
                SAME_PARITY, f"vertex {v}: degree {dg} in G, {dh} in H", vertex=v
            ))
    bound = g.m - 2 * g.n + 2
    if h.m < bound:
        out.append(Violation(EDGE_BOUND, f"|E(H)| = {h.m} < {bound}"))
    return out
