"""Seeded random connected graphs.

Scheme, fixed so that ``(n, p, seed)`` determines the graph:

1. ``rng = random.Random(seed)``.
2. Backbone: a Prüfer sequence of ``n - 2`` draws ``rng.randint(1, n)``
   decoded to a labelled tree (uniform over all ``n**(n-2)`` trees).
3. Extras: pairs ``(i, j)``, ``i < j``, are walked in lexicographic order
   with geometric gaps ``floor(log(U) / log(1 - p))``, ``U = 1 - rng.random()``,
   which selects each pair independently with probability ``p``.  Selected
   pairs already in the backbone are skipped.
"""

from __future__ import annotations

import heapq
import math
import random

from .graph import Edge, Graph, build_graph

MAX_SEED = 2**64 - 1


def prufer_tree(n: int, rng: random.Random) -> list[Edge]:
    if n <= 1:
        return []
    if n == 2:
        return [(1, 2)]
    seq = [rng.randint(1, n) for _ in range(n - 2)]
    degree = [1] * (n + 1)
    for v in seq:
        degree[v] += 1
    leaves = [v for v in range(1, n + 1) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((min(leaf, v), max(leaf, v)))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    a, b = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((a, b))
    return edges


def _bernoulli_pairs(n: int, p: float, rng: random.Random):
    if p <= 0.0 or n < 2:
        return
    log_q = math.log1p(-p) if p < 1.0 else None
    i, j = 1, 1  # position just before pair (1, 2)
    while True:
        skip = 0 if log_q is None else int(math.log(1.0 - rng.random()) / log_q)
        j += skip + 1
        while j > n:
            over = j - n
            i += 1
            if i >= n:
                return
            j = i + over
        yield i, j


def generate_random_graph(n: int, p: float, seed: int) -> Graph:
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    if not (isinstance(p, (int, float)) and 0.0 <= p <= 1.0):
        raise ValueError(f"p must lie in [0, 1], got {p}")
    if not 0 <= seed <= MAX_SEED:
        raise ValueError(f"seed must be an unsigned 64-bit integer, got {seed}")
    rng = random.Random(seed)
    tree = prufer_tree(n, rng)
    edges = set(tree)
    for e in _bernoulli_pairs(n, p, rng):
        edges.add(e)
    return build_graph(n, sorted(edges))
