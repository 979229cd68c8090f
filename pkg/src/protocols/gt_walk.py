"""GreaterThan by a noisy descending walk with backtracking.

The walk moves over the binary-search tree of the baseline protocol,
checking every node it enters with cheap (error 1/4) EQ tests and
stepping back to the parent when a check fails. Leaves and chain nodes
are checked too, so a walk that slipped onto a wrong leaf climbs back
out. Below every leaf hangs a chain; reaching the chain of the true
first-difference index traps the walk, because every check on that
chain compares truly equal prefixes. After m steps the answer
is read off the chain the walk stands on.
"""

import logging
from dataclasses import dataclass
from enum import Enum, auto
from typing import Callable, Optional

from src.comm.bits import BitString, check_same_length
from src.comm.channel import Channel, Party, ProtocolResult
from src.comm.coins import CoinSource
from src.core.errors import InputError, ProtocolError
from src.protocols.eq import run_eq
from src.protocols.walk_tree import NodeKind, WalkNode, WalkParams, WalkTree, build_walk_tree, walk_bit_bound

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class NodeVerdict:
    """Outcome of checking one walk node.

    direction is the child to descend into when the node is consistent:
    0 for the left half (or a leaf's chain), 1 for the right half.
    """
    consistent: bool
    bits: int
    direction: Optional[int] = None


class Move(Enum):
    """What a walk step did."""
    DESCEND = auto()
    BACKTRACK = auto()
    STAY = auto()


@dataclass(frozen=True)
class WalkStep:
    """Record of one walk step, passed to on_step observers."""
    index: int
    source: int
    target: int
    move: Move
    bits: int


def verify_node(
    node: WalkNode,
    x: BitString,
    y: BitString,
    per_check_k: int,
    coins: CoinSource,
    channel: Optional[Channel] = None,
) -> NodeVerdict:
    """Check the belief attached to a search node.

    Runs EQ on the prefix 1..lo-1 (expecting "equal"), then checks that
    the interval lo..hi holds a difference. On an internal node the
    interval is tested as its two halves, and the first half found
    unequal names the child to descend into; an "unequal" EQ verdict is
    never wrong, so an on-path node passes with probability at least
    1 - 2^-k. On a leaf Alice sends x_i itself and the check is exact.
    An empty prefix is not tested.

    Args:
        node: Internal or leaf node of the walk tree
        x: Alice's input
        y: Bob's input
        per_check_k: Fingerprints per EQ test
        coins: Public coins
        channel: Optional shared channel

    Returns:
        NodeVerdict with the bits charged by this check
    """
    if node.kind is NodeKind.CHAIN:
        raise InputError("verify_node applies to search nodes only")
    channel = channel if channel is not None else Channel()
    before = channel.bits

    prefix_equal = run_eq(x.segment(1, node.lo - 1), y.segment(1, node.lo - 1), per_check_k, coins, channel)

    direction = None
    if node.kind is NodeKind.LEAF:
        x_i = channel.send_bit(Party.ALICE, x.bit(node.index))
        if x_i != y.bit(node.index):
            direction = 0
    else:
        mid = node.mid
        left_equal = run_eq(x.segment(node.lo, mid), y.segment(node.lo, mid), per_check_k, coins, channel)
        right_equal = run_eq(x.segment(mid + 1, node.hi), y.segment(mid + 1, node.hi), per_check_k, coins, channel)
        if not left_equal:
            direction = 0
        elif not right_equal:
            direction = 1

    consistent = prefix_equal and direction is not None
    return NodeVerdict(consistent=consistent, bits=channel.bits - before,
                       direction=direction if consistent else None)


class _Walker:
    """State of one gt_walk run."""

    def __init__(self, tree: WalkTree, x: BitString, y: BitString, params: WalkParams,
                 coins: CoinSource, channel: Channel):
        self.tree = tree
        self.x = x
        self.y = y
        self.params = params
        self.coins = coins
        self.channel = channel
        self.current = tree.root

    def _up(self, node: WalkNode) -> tuple[WalkNode, Move]:
        if node.parent is None:
            return node, Move.STAY
        return self.tree.node(node.parent), Move.BACKTRACK

    def _search_step(self, node: WalkNode) -> tuple[WalkNode, Move]:
        # Bob learns the verdict and announces it: 1 bit, plus the direction on internal nodes
        verdict = verify_node(node, self.x, self.y, self.params.per_check_k, self.coins, self.channel)
        consistent = self.channel.send_bit(Party.BOB, verdict.consistent)
        if not consistent:
            return self._up(node)
        if node.kind is NodeKind.LEAF:
            return self.tree.node(node.children[0]), Move.DESCEND
        go_right = self.channel.send_bit(Party.BOB, verdict.direction)
        return self.tree.node(node.children[1 if go_right else 0]), Move.DESCEND

    def _chain_step(self, node: WalkNode) -> tuple[WalkNode, Move]:
        i = node.index
        prefix_x, prefix_y = self.x.segment(1, i - 1), self.y.segment(1, i - 1)
        if prefix_x:
            equal = run_eq(prefix_x, prefix_y, self.params.per_check_k, self.coins, self.channel)
            equal = self.channel.send_bit(Party.BOB, equal)
            if not equal:
                return self.tree.node(node.parent), Move.BACKTRACK
        if node.children:
            return self.tree.node(node.children[0]), Move.DESCEND
        return node, Move.STAY

    def step(self) -> tuple[WalkNode, Move]:
        node = self.current
        if node.kind is NodeKind.CHAIN:
            return self._chain_step(node)
        return self._search_step(node)


def gt_walk(
    x: BitString,
    y: BitString,
    params: WalkParams,
    coins: CoinSource,
    channel: Optional[Channel] = None,
    on_step: Optional[Callable[[WalkStep], None]] = None,
) -> ProtocolResult[bool]:
    """Decide x > y with O(log n + log(1/eps)) bits.

    Runs exactly params.steps steps. Both parties learn every move, so
    the final position (and with it x_i on a chain) is common knowledge.
    The answer is x_i when the walk ends on a chain node, which is the
    same as ending deeper than ceil(log2 n), and False otherwise.

    Args:
        x: Alice's input
        y: Bob's input
        params: Walk parameters
        coins: Public coins
        channel: Optional shared channel
        on_step: Optional observer called after every step

    Returns:
        ProtocolResult whose output is x > y
    """
    n = check_same_length(x, y)
    params.check_length(n)
    channel = channel if channel is not None else Channel()
    start_bits = channel.bits
    walker = _Walker(build_walk_tree(n, params), x, y, params, coins, channel)

    for index in range(params.steps):
        before = channel.bits
        source = walker.current
        walker.current, move = walker.step()
        if on_step is not None:
            on_step(WalkStep(index=index, source=source.id, target=walker.current.id,
                             move=move, bits=channel.bits - before))

    final = walker.current
    answer = final.kind is NodeKind.CHAIN and x.bit(final.index) == 1

    used = channel.bits - start_bits
    if used > walk_bit_bound(params):
        raise ProtocolError(f"gt_walk used {used} bits, bound is {walk_bit_bound(params)}")
    logger.debug("gt_walk n=%d steps=%d: node %d (%s) -> %s, %d bits",
                 n, params.steps, final.id, final.kind.name, answer, used)
    return ProtocolResult(output=answer, transcript=channel.transcript)
