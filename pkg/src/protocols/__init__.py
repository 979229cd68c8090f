"""Randomized EQ and GreaterThan protocols."""

from src.protocols.eq import EqParams, eq_protocol, eq_bit_bound, eq_false_equal_probability, run_eq
from src.protocols.gt_baseline import gt_baseline, baseline_bit_bound, baseline_eq_k, search_depth
from src.protocols.walk_tree import (
    NodeKind,
    WalkNode,
    WalkParams,
    WalkTree,
    build_walk_tree,
    walk_bit_bound,
)
from src.protocols.gt_walk import Move, NodeVerdict, WalkStep, gt_walk, verify_node

__all__ = [
    "EqParams",
    "eq_protocol",
    "eq_bit_bound",
    "eq_false_equal_probability",
    "run_eq",
    "gt_baseline",
    "baseline_bit_bound",
    "baseline_eq_k",
    "search_depth",
    "NodeKind",
    "WalkNode",
    "WalkParams",
    "WalkTree",
    "build_walk_tree",
    "walk_bit_bound",
    "Move",
    "NodeVerdict",
    "WalkStep",
    "gt_walk",
    "verify_node",
]
