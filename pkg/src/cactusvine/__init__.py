"""Global minimum cuts and their cactus representation.

The pipeline packs spanning trees so that every global mincut crosses at
most two edges of some tree, labels the minimal mincut of every vertex and
edge through dynamic-forest sweeps over each tree, and assembles the
laminar hierarchy of all mincuts into an O(n)-edge cactus.
"""

from .cactus import Cactus, build_cactus, cactus_to_dot, cactus_to_json, enumerate_cactus_cuts
from .dynforest import INF, DynForest, NaiveForest
from .graph import (Disconnected, MalformedInput, NonPositiveWeight, WeightedGraph,
                    cut_weight, make_graph, merge_vertices, parse_graph, two_set_weight)
from .labels import CutLabel, label_contains, label_size, label_weight, materialize
from .oracle import MincutInventory, brute_mincuts, verify_cactus, verify_labels
from .packing import TreePacking, pack_trees, respects_count, verify_packing
from .pipeline import PipelineResult, run_pipeline
from .tree import PathDecomposition, RootedSpanningTree, build_rooted_tree, heavy_path_decomposition

__version__ = "0.1.0"

__all__ = [
    "Cactus", "CutLabel", "Disconnected", "DynForest", "INF", "MalformedInput",
    "MincutInventory", "NaiveForest", "NonPositiveWeight", "PathDecomposition",
    "PipelineResult", "RootedSpanningTree", "TreePacking", "WeightedGraph",
    "brute_mincuts", "build_cactus", "build_rooted_tree", "cactus_to_dot",
    "cactus_to_json", "cut_weight", "enumerate_cactus_cuts",
    "heavy_path_decomposition", "label_contains", "label_size", "label_weight",
    "make_graph", "materialize", "merge_vertices", "pack_trees", "parse_graph",
    "respects_count", "run_pipeline", "two_set_weight", "verify_cactus",
    "verify_labels", "verify_packing",
]
