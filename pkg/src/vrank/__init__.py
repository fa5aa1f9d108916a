"""Bounded vertex rankings: unique-superior colorings and l-vertex rankings."""

from .colorers import (
    LayerPartition,
    centroid_vr_coloring,
    degenerate_us_coloring,
    kary_level_coloring,
    layered_us_coloring,
    separator_lvr_coloring,
    shared_neighbor_coloring,
    three_path_separator,
)
from .exact import exact_rank_number, min_f, p_predicate
from .generators import apollonian, complete_kary_tree, grid, path, subdivided_replicated_clique
from .graph import (
    BfsTree,
    DegeneracyOrdering,
    Graph,
    bfs_tree,
    build_graph,
    components,
    degeneracy_ordering,
    induced_subgraph,
    square,
)
from .validators import Violation, is_l_vr, is_proper, is_us, is_vr

__version__ = "0.1.0"
