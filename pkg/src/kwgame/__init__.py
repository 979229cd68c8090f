"""Threshold decision trees and the two-party falsified-axiom search."""

from src.kwgame.search_tree import (
    Leaf,
    QueryNode,
    SearchNode,
    SearchTree,
    depth,
    eval_search_tree,
    format_search_tree,
    parse_search_tree,
)
from src.kwgame.builder import SearchTreeBuilder, SplitRecord, build_search_tree, depth_bound
from src.kwgame.play import kw_bit_bound, kw_play, node_epsilon

__all__ = [
    "Leaf",
    "QueryNode",
    "SearchNode",
    "SearchTree",
    "depth",
    "eval_search_tree",
    "format_search_tree",
    "parse_search_tree",
    "SearchTreeBuilder",
    "SplitRecord",
    "build_search_tree",
    "depth_bound",
    "kw_bit_bound",
    "kw_play",
    "node_epsilon",
]
