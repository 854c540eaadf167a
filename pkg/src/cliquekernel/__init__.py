"""Kernelization toolkit for k-clique search."""
from .bits import BitVector, intersect_and_subset
from .coloring import Coloring, greedy_color, reduce_by_color_index
from .dominance import (
    DominanceRule,
    ExecMode,
    edge_dominance_disjoint_pass,
    edge_dominance_shared_pass,
    run_to_fixpoint,
    vertex_dominance_pass,
)
from .generator import GenSpec, default_edge_count, generate
from .graph import Graph, GraphError
from .io import GraphFormatError, load_graph, load_matrix, save_matrix
from .oracle import clique_number, max_clique
from .permutations import unrank_tuple
from .report import ReductionReport
from .struction import lift_clique, struction

__version__ = "0.1.0"
