from __future__ import annotations

from math import comb

import pytest

from pforest.forest import find_perfect_forest
from pforest.graph import build_graph, complete_graph, cycle_graph
from pforest.oracle import (
    OracleInputError,
    connected_labeled_graphs,
    enumerate_perfect_forests,
    even_components,
    exhaustive_theorem_check,
    graph_from_mask,
)


def connected_count(n: int) -> int:
    """Labelled connected graphs on n vertices via the exponential-formula recurrence."""
    c = [0, 1]
    for k in range(2, n + 1):
        total = 2 ** comb(k, 2)
        total -= sum(comb(k - 1, j - 1) * c[j] * 2 ** comb(k - j, 2) for j in range(1, k))
        c.append(total)
    return c[n]


def test_recurrence_values():
    assert [connected_count(n) for n in range(1, 7)] == [1, 1, 4, 38, 728, 26704]


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_connected_filter_counts(n):
    assert sum(1 for _ in connected_labeled_graphs(n)) == connected_count(n)


def test_enumerate_examples():
    assert enumerate_perfect_forests(complete_graph(2)).forests == [((1, 2),)]
    c4 = enumerate_perfect_forests(cycle_graph(4))
    # sorted edges (1,2),(1,4),(2,3),(3,4): masks 0b0110 then 0b1001
    assert c4.forests == [((1, 4), (2, 3)), ((1, 2), (3, 4))]
    assert c4.subsets_scanned == 16
    k4 = enumerate_perfect_forests(complete_graph(4))
    assert k4.forests == [((1, 4), (2, 3)), ((1, 3), (2, 4)), ((1, 2), (3, 4))]
    assert k4.subsets_scanned == 64
    assert enumerate_perfect_forests(cycle_graph(5)).forests == []


def test_enumerate_ascending_mask_order():
    g = build_graph(6, [(1, 2), (1, 3), (2, 3), (3, 4), (4, 5), (4, 6), (5, 6)])
    forests = enumerate_perfect_forests(g).forests
    index = {e: k for k, e in enumerate(g.edges)}
    masks = [sum(1 << index[e] for e in f) for f in forests]
    assert masks == sorted(masks) and len(set(masks)) == len(masks)


def test_cap():
    with pytest.raises(OracleInputError):
        enumerate_perfect_forests(complete_graph(8))
    assert enumerate_perfect_forests(complete_graph(4), cap=6).forests
    with pytest.raises(OracleInputError):
        enumerate_perfect_forests(complete_graph(4), cap=5)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_nonempty_iff_even_components(n):
    for mask in range(1 << comb(n, 2)):
        g = graph_from_mask(n, mask)
        forests = enumerate_perfect_forests(g).forests
        assert bool(forests) == even_components(g)
        if forests:
            assert find_perfect_forest(g).edges in forests


@pytest.mark.parametrize("n, expected", [(2, 1), (4, 38)])
def test_exhaustive_small(n, expected):
    summary = exhaustive_theorem_check(n)
    assert summary.graphs_checked == expected
    assert summary.failures == [] and summary.converse_failures == []
    assert summary.ok


@pytest.mark.parametrize("n, cap", [(3, 6), (0, 6), (8, 6)])
def test_exhaustive_rejects(n, cap):
    with pytest.raises(OracleInputError):
        exhaustive_theorem_check(n, vertex_cap=cap)
