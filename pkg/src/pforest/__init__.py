"""Perfect forests: spanning forests with odd degrees and induced trees."""

from .forest import (
    OddComponentError,
    PerfectForest,
    Representation,
    all_ones_representation,
    find_perfect_forest,
    parity_flip_subgraph,
    refine_once,
)
from .gf2 import BitVector, EdgeBasis, edge_vector, xor_sum
from .graph import Graph, build_graph, connected_components, spanning_tree, tree_path
from .verify import Violation, verify_parity_flip, verify_perfect_forest

__all__ = [
    "BitVector",
    "EdgeBasis",
    "Graph",
    "OddComponentError",
    "PerfectForest",
    "Representation",
    "Violation",
    "all_ones_representation",
    "build_graph",
    "connected_components",
    "edge_vector",
    "find_perfect_forest",
    "parity_flip_subgraph",
    "refine_once",
    "spanning_tree",
    "tree_path",
    "verify_parity_flip",
    "verify_perfect_forest",
    "xor_sum",
]
