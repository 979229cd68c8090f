"""Equality by random inner-product fingerprints.

The public coins name k random n-bit strings r_1..r_k. Alice sends the
k parities <x, r_i> mod 2 and Bob compares them with his own. Equal
inputs always agree; unequal inputs agree on each r_i with probability
exactly 1/2, so the protocol errs (says "equal") with probability 2^-k.
"""

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from src.comm.bits import BitString, check_same_length
from src.comm.channel import Channel, Party, ProtocolResult
from src.comm.coins import CoinSource, FixedCoins
from src.core.errors import InputError
from src.core.settings import RESULT_BITS

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EqParams:
    """EQ repetitions; the false-"equal" probability is 2^-k."""
    k: int

    def __post_init__(self):
        if self.k < 1:
            raise InputError(f"k must be at least 1, got {self.k}")

    @property
    def error(self) -> float:
        """Error probability 2^-k."""
        return 2.0 ** -self.k


def _parity(bits: Sequence[int], mask: Sequence[int]) -> int:
    return sum(b & r for b, r in zip(bits, mask)) & 1


def run_eq(
    xs: Sequence[int],
    ys: Sequence[int],
    k: int,
    coins: CoinSource,
    channel: Channel,
) -> bool:
    """Run EQ on two equal-length bit segments over an existing channel.

    Empty segments are equal by definition and cost nothing. Alice sends
    k bits; Bob learns the verdict.

    Args:
        xs: Alice's segment
        ys: Bob's segment
        k: Number of fingerprints
        coins: Public coins
        channel: Channel charged for Alice's message

    Returns:
        True if the fingerprints agree ("equal")
    """
    if len(xs) != len(ys):
        raise InputError(f"EQ segment lengths differ: {len(xs)} != {len(ys)}")
    if not xs:
        return True

    masks = [coins.draw_bits(len(xs)) for _ in range(k)]
    alice_fingerprint = channel.send(Party.ALICE, [_parity(xs, r) for r in masks])
    bob_fingerprint = tuple(_parity(ys, r) for r in masks)
    return alice_fingerprint == bob_fingerprint


def eq_protocol(
    x: BitString,
    y: BitString,
    params: EqParams,
    coins: CoinSource,
    channel: Optional[Channel] = None,
    announce: bool = False,
) -> ProtocolResult[bool]:
    """Decide x = y with one-sided error 2^-k.

    Args:
        x: Alice's input
        y: Bob's input
        params: EQ parameters
        coins: Public coins
        channel: Optional shared channel; a fresh one is used otherwise
        announce: If True Bob sends the verdict back (1 extra bit)

    Returns:
        ProtocolResult whose output is True for "equal"
    """
    check_same_length(x, y)
    channel = channel if channel is not None else Channel()

    equal = run_eq(x.bits, y.bits, params.k, coins, channel)
    if announce:
        equal = channel.send_bit(Party.BOB, equal)

    logger.debug("eq n=%d k=%d -> %s", x.n, params.k, equal)
    return ProtocolResult(output=equal, transcript=channel.transcript)


def eq_bit_bound(k: int, announce: bool = False) -> int:
    """Exact cost of eq_protocol on inputs of positive length."""
    return k + (RESULT_BITS if announce else 0)


def eq_false_equal_probability(x: BitString, y: BitString, k: int) -> Fraction:
    """Exact probability that eq_protocol answers "equal".

    Enumerates all 2^(k*n) coin sequences, so keep k*n small.

    Args:
        x: Alice's input
        y: Bob's input
        k: Number of fingerprints

    Returns:
        Probability as an exact fraction
    """
    n = check_same_length(x, y)
    params = EqParams(k)
    space = k * n
    hits = 0
    for script in itertools.product((0, 1), repeat=space):
        if eq_protocol(x, y, params, FixedCoins(script)).output:
            hits += 1
    return Fraction(hits, 2 ** space)
