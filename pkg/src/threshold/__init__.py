"""Threshold functions and their two-party evaluation."""

from src.threshold.function import (
    ThresholdFunction,
    bit_width,
    comparison_range,
    encode_signed,
    eval_threshold,
    value_range,
    width_of,
)
from src.threshold.partition import Partition, parse_assignment, parse_partition
from src.threshold.protocol import (
    deterministic_bit_bound,
    threshold_bit_bound,
    threshold_protocol,
    threshold_protocol_deterministic,
    threshold_walk_params,
)

__all__ = [
    "ThresholdFunction",
    "bit_width",
    "comparison_range",
    "encode_signed",
    "eval_threshold",
    "value_range",
    "width_of",
    "Partition",
    "parse_assignment",
    "parse_partition",
    "deterministic_bit_bound",
    "threshold_bit_bound",
    "threshold_protocol",
    "threshold_protocol_deterministic",
    "threshold_walk_params",
]
