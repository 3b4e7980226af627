"""8-edge-coloring of planar graphs with maximum degree at most 8 in O(n log n)."""
from ._kernels import BACKEND
from .chain_index import ChainIndex, StaleIndexError, build, lazy
from .classify import EdgeType, classify_edge, classify_weak_edge, verify_type
from .driver import (FallbackColoring, GuaranteeViolation, NoReducibleEdges, RunTrace,
                     color_graph, color_graph_with_fallback)
from .generators import generate_planar
from .graph_core import Graph, PartialColoring, new_coloring, new_graph
from .oracle import brute_chromatic_index, naive_chain, single_edge_fan, verify_coloring
from .reduce import K_BUTTERFLY, K_WEAK, eliminate_type2, filter_chain_independent
from .reducible import find_butterfly, is_weak, reducible_stats, scan_reducible

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "ChainIndex", "StaleIndexError", "build", "lazy", "EdgeType", "classify_edge",
    "classify_weak_edge", "verify_type", "FallbackColoring", "GuaranteeViolation",
    "NoReducibleEdges", "RunTrace", "color_graph", "color_graph_with_fallback",
    "generate_planar", "Graph", "PartialColoring", "new_coloring", "new_graph",
    "brute_chromatic_index", "naive_chain", "single_edge_fan", "verify_coloring",
    "K_BUTTERFLY", "K_WEAK", "eliminate_type2", "filter_chain_independent",
    "find_butterfly", "is_weak", "reducible_stats", "scan_reducible",
]
