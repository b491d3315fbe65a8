"""Weak saturation numbers of graphs, with a focus on trees."""

from .graph import Graph, GraphSpecError, parse_graph_spec
from .pattern import Pattern, CaterpillarSpec, tree_features

__all__ = ["Graph", "GraphSpecError", "parse_graph_spec", "Pattern", "CaterpillarSpec", "tree_features"]
__version__ = "0.1.0"
