from .degenerate import degenerate_us_coloring, square_greedy_coloring
from .layered import LayerPartition, layered_us_coloring, peel_layers, shared_neighbor_coloring
from .separator import SeparatorNode, separator_lvr_coloring, three_path_separator
from .trees import centroid_vr_coloring, kary_level_coloring

__all__ = [
    "LayerPartition",
    "SeparatorNode",
    "centroid_vr_coloring",
    "degenerate_us_coloring",
    "kary_level_coloring",
    "layered_us_coloring",
    "peel_layers",
    "separator_lvr_coloring",
    "shared_neighbor_coloring",
    "square_greedy_coloring",
    "three_path_separator",
]
