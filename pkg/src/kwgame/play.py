"""Randomized two-party search for a falsified axiom."""

import logging
from typing import Optional

from src.comm.channel import Channel, Party, ProtocolResult
from src.comm.coins import CoinSource
from src.core.errors import InputError, ProtocolError
from src.core.settings import KW_BRANCH_BITS
from src.kwgame.search_tree import Leaf, SearchTree, depth
from src.threshold.partition import Partition
from src.threshold.protocol import threshold_bit_bound, threshold_protocol

logger = logging.getLogger(__name__)


def node_epsilon(tree: SearchTree, epsilon_total: float) -> float:
    """Per-node error: the total budget split evenly over the tree depth."""
    d = depth(tree)
    return epsilon_total / d if d else epsilon_total


def kw_bit_bound(tree: SearchTree, epsilon_total: float) -> int:
    """depth * (largest per-node threshold bound + branch bits).

    Args:
        tree: Search tree
        epsilon_total: Error budget of the whole game

    Returns:
        Hard bound on the bits kw_play can use
    """
    d = depth(tree)
    if d == 0:
        return 0
    eps = node_epsilon(tree, epsilon_total)
    per_node = max(threshold_bit_bound(query.to_threshold(), eps) for query in tree.queries())
    return d * (per_node + KW_BRANCH_BITS)


def kw_play(
    tree: SearchTree,
    part: Partition,
    alpha_a: dict[int, int],
    alpha_b: dict[int, int],
    epsilon_total: float,
    coins: CoinSource,
    channel: Optional[Channel] = None,
) -> ProtocolResult[int]:
    """Walk the tree, deciding each query with the threshold protocol.

    Args:
        tree: Search tree over part.n variables
        part: Variable partition
        alpha_a: Alice's projection
        alpha_b: Bob's projection
        epsilon_total: Overall error budget in (0, 1)
        coins: Public coins
        channel: Optional shared channel

    Returns:
        ProtocolResult whose output is the reached leaf's axiom index
    """
    if not 0 < epsilon_total < 1:
        raise InputError(f"epsilon must lie in (0, 1), got {epsilon_total}")
    if part.n != tree.n:
        raise InputError(f"partition covers {part.n} variables, tree has {tree.n}")
    part.check_projection(alpha_a, alpha_b)
    channel = channel if channel is not None else Channel()
    start_bits = channel.bits
    eps = node_epsilon(tree, epsilon_total)

    node = tree.root
    while not isinstance(node, Leaf):
        outcome = threshold_protocol(node.query.to_threshold(), part, alpha_a, alpha_b, eps, coins, channel).output
        # both parties echo the branch they take
        channel.send_bit(Party.ALICE, outcome)
        outcome = channel.send_bit(Party.BOB, outcome)
        node = node.if_true if outcome else node.if_false

    used = channel.bits - start_bits
    bound = kw_bit_bound(tree, epsilon_total)
    if used > bound:
        raise ProtocolError(f"kw_play used {used} bits, bound is {bound}")
    logger.debug("kw_play reached axiom %d using %d bits", node.axiom, used)
    return ProtocolResult(output=node.axiom, transcript=channel.transcript)
