"""Binary-search GreaterThan with high-confidence EQ at every search step."""

import logging
import math
from typing import Optional

from src.comm.bits import BitString, check_same_length
from src.comm.channel import Channel, Party, ProtocolResult
from src.comm.coins import CoinSource
from src.core.errors import InputError
from src.core.settings import RESULT_BITS
from src.protocols.eq import run_eq

logger = logging.getLogger(__name__)


def search_depth(n: int) -> int:
    """ceil(log2 n) for n >= 1."""
    return (n - 1).bit_length()


def baseline_eq_k(n: int, epsilon: float) -> int:
    """Fingerprints per search step so that each step errs with at most eps/(2n)."""
    if not 0 < epsilon < 1:
        raise InputError(f"epsilon must lie in (0, 1), got {epsilon}")
    return max(1, math.ceil(math.log2(2 * n / epsilon)))


def baseline_bit_bound(n: int, epsilon: float) -> int:
    """Worst-case bits of gt_baseline.

    One guard EQ plus at most ceil(log2 n) search steps, each k bits, then one
    bit of x_i from Alice and one result bit from Bob.
    """
    k = baseline_eq_k(n, epsilon)
    return (search_depth(n) + 1) * k + 1 + RESULT_BITS


def gt_baseline(
    x: BitString,
    y: BitString,
    epsilon: float,
    coins: CoinSource,
    channel: Optional[Channel] = None,
) -> ProtocolResult[bool]:
    """Decide x > y by binary search for the first differing bit.

    The guard EQ on the full strings runs first, so x = y always yields
    False. Errors are bounded by a union bound over at most
    ceil(log2 n) + 1 EQ calls of error eps/(2n) each.

    Args:
        x: Alice's input
        y: Bob's input
        epsilon: Target error in (0, 1)
        coins: Public coins
        channel: Optional shared channel

    Returns:
        ProtocolResult whose output is x > y
    """
    n = check_same_length(x, y)
    k = baseline_eq_k(n, epsilon)
    channel = channel if channel is not None else Channel()

    if run_eq(x.bits, y.bits, k, coins, channel):
        answer = channel.send_bit(Party.BOB, False)
        logger.debug("gt_baseline n=%d: guard says equal", n)
        return ProtocolResult(output=answer, transcript=channel.transcript)

    lo, hi = 1, n
    while lo < hi:
        mid = (lo + hi) // 2
        # Left half unequal => first difference lies in [lo, mid]
        if run_eq(x.segment(lo, mid), y.segment(lo, mid), k, coins, channel):
            lo = mid + 1
        else:
            hi = mid

    x_i = channel.send_bit(Party.ALICE, x.bit(lo))
    answer = channel.send_bit(Party.BOB, x_i and not y.bit(lo))

    logger.debug("gt_baseline n=%d: index %d -> %s (%d bits)", n, lo, answer, channel.bits)
    return ProtocolResult(output=answer, transcript=channel.transcript)
