"""Binary-search tree with confirmation chains, walked by the GT protocol."""

import logging
import math
from dataclasses import dataclass, field
from enum import Enum, auto
from functools import lru_cache
from typing import Optional

from src.core.errors import InputError
from src.core.settings import CHAIN_FACTOR, CHAIN_OFFSET, DEFAULT_PER_CHECK_K, STEP_FACTOR
from src.protocols.gt_baseline import search_depth

logger = logging.getLogger(__name__)


def log2_inverse(epsilon: float) -> int:
    """ceil(log2(1/epsilon)) for epsilon in (0, 1)."""
    if not 0 < epsilon < 1:
        raise InputError(f"epsilon must lie in (0, 1), got {epsilon}")
    return math.ceil(-math.log2(epsilon))


@dataclass(frozen=True)
class WalkParams:
    """Parameters of the random-walk GT protocol."""
    epsilon: float
    chain_len: int
    steps: int
    per_check_k: int = DEFAULT_PER_CHECK_K

    def __post_init__(self):
        """Validate parameters."""
        log2_inverse(self.epsilon)
        if self.chain_len < 1:
            raise InputError(f"chain_len must be positive, got {self.chain_len}")
        if self.per_check_k < 1:
            raise InputError(f"per_check_k must be positive, got {self.per_check_k}")
        if self.steps < self.chain_len:
            raise InputError(f"steps={self.steps} shorter than chain_len={self.chain_len}")

    def check_length(self, n: int) -> None:
        """Check that a correct run on n-bit inputs can reach chain depth."""
        if n < 1:
            raise InputError(f"n must be positive, got {n}")
        needed = search_depth(n) + self.chain_len
        if self.steps < needed:
            raise InputError(f"steps={self.steps} cannot reach chain depth {needed} for n={n}")

    @classmethod
    def for_error(
        cls,
        n: int,
        epsilon: float,
        per_check_k: int = DEFAULT_PER_CHECK_K,
        step_factor: int = STEP_FACTOR,
        chain_factor: int = CHAIN_FACTOR,
        chain_offset: int = CHAIN_OFFSET,
    ) -> 'WalkParams':
        """Default parameters for inputs of length n and target error epsilon.

        Args:
            n: Input bit-length
            epsilon: Target error in (0, 1)
            per_check_k: EQ repetitions per test
            step_factor: Multiplier of log2 n + log2(1/eps) in the step count
            chain_factor: Multiplier of log2(1/eps) in the chain length
            chain_offset: Constant added to the chain length

        Returns:
            Calibrated WalkParams
        """
        if n < 1:
            raise InputError(f"n must be positive, got {n}")
        log_inv = log2_inverse(epsilon)
        chain_len = chain_factor * log_inv + chain_offset
        steps = step_factor * (search_depth(n) + log_inv) + chain_len
        return cls(epsilon=epsilon, chain_len=chain_len, steps=steps, per_check_k=per_check_k)

    @property
    def step_bits(self) -> int:
        """Worst-case bits of one walk step: B = 3k + 2."""
        return 3 * self.per_check_k + 2


def walk_bit_bound(params: WalkParams) -> int:
    """Hard upper bound B*m + 2 on the bits of one gt_walk run."""
    return params.step_bits * params.steps + 2


class NodeKind(Enum):
    """Role of a node in the walk tree."""
    INTERNAL = auto()
    LEAF = auto()
    CHAIN = auto()


@dataclass
class WalkNode:
    """One state of the walk.

    Search nodes carry the interval [lo, hi] with the belief that bits
    1..lo-1 agree and the first difference lies in [lo, hi]. Chain nodes
    sit below the leaf [lo, lo] at positions 1..chain_len.
    """
    id: int
    kind: NodeKind
    lo: int
    hi: int
    depth: int
    parent: Optional[int] = None
    children: list[int] = field(default_factory=list)
    chain_pos: int = 0

    @property
    def mid(self) -> int:
        """Split point of the interval."""
        return (self.lo + self.hi) // 2

    @property
    def index(self) -> int:
        """Candidate index of a leaf or chain node."""
        return self.lo


@dataclass
class WalkTree:
    """Search tree over [1, n] with a chain below every leaf."""

    n: int
    chain_len: int
    nodes: list[WalkNode] = field(default_factory=list)
    leaf_ids: dict[int, int] = field(default_factory=dict)  # index -> node id

    @property
    def root(self) -> WalkNode:
        """Root node, interval [1, n]."""
        return self.nodes[0]

    @property
    def search_depth(self) -> int:
        """ceil(log2 n), the deepest leaf level."""
        return search_depth(self.n)

    def node(self, node_id: int) -> WalkNode:
        """Get a node by id."""
        return self.nodes[node_id]

    def leaf(self, index: int) -> WalkNode:
        """Get the leaf for candidate index i."""
        return self.nodes[self.leaf_ids[index]]

    def search_nodes(self) -> list[WalkNode]:
        """Internal and leaf nodes."""
        return [node for node in self.nodes if node.kind is not NodeKind.CHAIN]

    def chain(self, index: int) -> list[WalkNode]:
        """Chain nodes below leaf i, top to bottom."""
        chain = []
        node = self.leaf(index)
        while node.children:
            node = self.nodes[node.children[0]]
            chain.append(node)
        return chain

    def _add(self, **kwargs) -> WalkNode:
        node = WalkNode(id=len(self.nodes), **kwargs)
        self.nodes.append(node)
        if node.parent is not None:
            self.nodes[node.parent].children.append(node.id)
        return node


@lru_cache(maxsize=64)
def _build(n: int, chain_len: int) -> WalkTree:
    tree = WalkTree(n=n, chain_len=chain_len)
    pending = [tree._add(kind=NodeKind.INTERNAL if n > 1 else NodeKind.LEAF, lo=1, hi=n, depth=0)]

    while pending:
        node = pending.pop()
        if node.lo == node.hi:
            node.kind = NodeKind.LEAF
            tree.leaf_ids[node.lo] = node.id
            below = node
            for pos in range(1, chain_len + 1):
                below = tree._add(
                    kind=NodeKind.CHAIN, lo=node.lo, hi=node.lo,
                    depth=node.depth + pos, parent=below.id, chain_pos=pos,
                )
            continue
        mid = node.mid
        left = tree._add(kind=NodeKind.INTERNAL, lo=node.lo, hi=mid, depth=node.depth + 1, parent=node.id)
        right = tree._add(kind=NodeKind.INTERNAL, lo=mid + 1, hi=node.hi, depth=node.depth + 1, parent=node.id)
        # Right first so the left subtree is expanded first
        pending.extend([right, left])

    logger.debug("walk tree n=%d chain_len=%d: %d nodes", n, chain_len, len(tree.nodes))
    return tree


def build_walk_tree(n: int, params: WalkParams) -> WalkTree:
    """Build the walk tree for inputs of length n.

    The result is cached and shared; treat it as read-only.

    Args:
        n: Input bit-length, at least 1
        params: Walk parameters (chain length)

    Returns:
        The walk tree
    """
    if n < 1:
        raise InputError(f"n must be positive, got {n}")
    return _build(n, params.chain_len)
