"""Two-party evaluation of a threshold function under a variable partition.

Alice holds the variables of part A and computes x_1 = sum over A of
a_i alpha_i; Bob computes x_2 over part B. f = 1 iff x_1 <= b - x_2, so
the parties run GreaterThan on x_1 and b - x_2 (offset-encoded over a
common range) and negate the answer.
"""

import logging
from typing import Optional

from src.comm.bits import BitString
from src.comm.channel import Channel, Party, ProtocolResult
from src.comm.coins import CoinSource
from src.core.errors import InputError
from src.core.settings import RESULT_BITS
from src.protocols.gt_walk import gt_walk
from src.protocols.walk_tree import WalkParams, walk_bit_bound
from src.threshold.function import (
    ThresholdFunction,
    bit_width,
    comparison_range,
    encode_signed,
    value_range,
    width_of,
)
from src.threshold.partition import Partition

logger = logging.getLogger(__name__)


def _check(f: ThresholdFunction, part: Partition, alpha_a: dict[int, int], alpha_b: dict[int, int]) -> None:
    if part.n != f.n:
        raise InputError(f"partition covers {part.n} variables, function has {f.n}")
    part.check_projection(alpha_a, alpha_b)


def threshold_walk_params(f: ThresholdFunction, epsilon: float) -> WalkParams:
    """Walk parameters for the GT instance deciding f."""
    return WalkParams.for_error(bit_width(f), epsilon)


def threshold_bit_bound(f: ThresholdFunction, epsilon: float) -> int:
    """Hard bound on threshold_protocol's bits: the walk bound at width bit_width(f)."""
    return walk_bit_bound(threshold_walk_params(f, epsilon))


def threshold_protocol(
    f: ThresholdFunction,
    part: Partition,
    alpha_a: dict[int, int],
    alpha_b: dict[int, int],
    epsilon: float,
    coins: CoinSource,
    channel: Optional[Channel] = None,
) -> ProtocolResult[int]:
    """Compute f(alpha) with error at most epsilon.

    Args:
        f: Threshold function
        part: Variable partition
        alpha_a: Alice's projection (1-based index -> bit)
        alpha_b: Bob's projection
        epsilon: Target error in (0, 1)
        coins: Public coins
        channel: Optional shared channel

    Returns:
        ProtocolResult whose output is the bit f(alpha)
    """
    _check(f, part, alpha_a, alpha_b)
    channel = channel if channel is not None else Channel()

    lo, hi = comparison_range(f)
    width = bit_width(f)
    alice_value = f.partial_sum(alpha_a)
    bob_value = f.bound - f.partial_sum(alpha_b)

    gt = gt_walk(
        encode_signed(alice_value, lo, hi, width),
        encode_signed(bob_value, lo, hi, width),
        threshold_walk_params(f, epsilon),
        coins,
        channel,
    )
    output = 0 if gt.output else 1
    logger.debug("threshold n=%d width=%d -> %d", f.n, width, output)
    return ProtocolResult(output=output, transcript=channel.transcript)


def deterministic_bit_bound(f: ThresholdFunction, part: Partition) -> int:
    """Bits of threshold_protocol_deterministic: Alice's sum width plus one result bit."""
    lo, hi = value_range([f.coefficients[i - 1] for i in sorted(part.part_a)])
    return width_of(lo, hi) + RESULT_BITS


def threshold_protocol_deterministic(
    f: ThresholdFunction,
    part: Partition,
    alpha_a: dict[int, int],
    alpha_b: dict[int, int],
    channel: Optional[Channel] = None,
) -> ProtocolResult[int]:
    """Compute f(alpha) exactly: Alice sends her partial sum, Bob answers.

    Cheap only while the coefficients are small; the message grows with
    the width of Alice's partial-sum range.

    Args:
        f: Threshold function
        part: Variable partition
        alpha_a: Alice's projection
        alpha_b: Bob's projection
        channel: Optional shared channel

    Returns:
        ProtocolResult whose output is the bit f(alpha)
    """
    _check(f, part, alpha_a, alpha_b)
    channel = channel if channel is not None else Channel()

    lo, hi = value_range([f.coefficients[i - 1] for i in sorted(part.part_a)])
    message = channel.send(Party.ALICE, encode_signed(f.partial_sum(alpha_a), lo, hi).bits)
    received = lo + BitString(message).value

    output = 1 if received + f.partial_sum(alpha_b) <= f.bound else 0
    output = int(channel.send_bit(Party.BOB, output))
    return ProtocolResult(output=output, transcript=channel.transcript)
