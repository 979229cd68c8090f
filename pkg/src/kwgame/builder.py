"""Balanced threshold decision trees from tree-like Cutting Planes proofs.

The builder keeps a proof subtree whose root line is falsified by every
assignment consistent with the answers so far. Each query asks about a
centroid line v of that subtree: if v is falsified the search moves into
v's subtree, otherwise v (and every line that now follows from known-true
lines) is dropped. Rule soundness forces a falsified derived line to have
a falsified premise, so the search ends on a falsified axiom.
"""

import logging
from dataclasses import dataclass
from typing import Optional

from src.core.errors import InputError, ProofError
from src.kwgame.search_tree import Leaf, QueryNode, SearchNode, SearchTree
from src.proofs.proof import AxiomRule, Proof, ProofLine
from src.proofs.system import System
from src.proofs.verifier import verify_proof

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SplitRecord:
    """Sizes of the live proof subtree before a query and on each branch."""
    size: int
    false_size: int
    true_size: int

    @property
    def balanced(self) -> bool:
        """Each branch keeps at most (2 * size + 1) / 3 lines."""
        return 3 * max(self.false_size, self.true_size) <= 2 * self.size + 1


def depth_bound(lines: int) -> int:
    """ceil(log_{3/2}(lines)) + 1, computed exactly."""
    k = 0
    while 3 ** k < lines * 2 ** k:
        k += 1
    return k + 1


class SearchTreeBuilder:
    """Builds the decision tree for one verified tree-like proof."""

    def __init__(self, proof: Proof, system: System):
        self.proof = proof
        self.system = system
        self.lines: dict[int, ProofLine] = {line.id: line for line in proof.lines}
        self.parent: dict[int, int] = {}
        for line in proof.lines:
            for premise in line.rule.premises:
                self.parent[premise] = line.id
        self.splits: list[SplitRecord] = []

    def _is_boolean(self, line: ProofLine) -> bool:
        return isinstance(line.rule, AxiomRule) and self.system.is_boolean_axiom(line.rule.index)

    def _initial_known(self) -> frozenset[int]:
        """Boolean axioms and every line derived from them alone."""
        known: set[int] = set()
        for line in self.proof.lines:
            premises = line.rule.premises
            if self._is_boolean(line) or (premises and all(p in known for p in premises)):
                known.add(line.id)
        return frozenset(known)

    def _live_premises(self, line_id: int, known: frozenset[int]) -> list[int]:
        return [p for p in self.lines[line_id].rule.premises if p not in known]

    def _normalize(self, root: int, known: frozenset[int]) -> int:
        """Descend without a query while the root has a single unknown premise."""
        while True:
            line = self.lines[root]
            if isinstance(line.rule, AxiomRule):
                return root
            live = self._live_premises(root, known)
            if not live:
                raise InputError(f"L{root} is falsified but all of its premises are known true")
            if len(live) > 1:
                return root
            root = live[0]

    def _mark_true(self, line_id: int, known: frozenset[int]) -> frozenset[int]:
        marked = set(known)
        marked.add(line_id)
        current: Optional[int] = self.parent.get(line_id)
        while current is not None and all(p in marked for p in self.lines[current].rule.premises):
            marked.add(current)
            current = self.parent.get(current)
        return frozenset(marked)

    def _subtree_sizes(self, root: int, known: frozenset[int]) -> dict[int, int]:
        sizes: dict[int, int] = {}
        order = []
        stack = [root]
        while stack:
            node = stack.pop()
            order.append(node)
            stack.extend(self._live_premises(node, known))
        for node in reversed(order):
            sizes[node] = 1 + sum(sizes[p] for p in self._live_premises(node, known))
        return sizes

    def _build(self, root: int, known: frozenset[int]) -> SearchNode:
        root = self._normalize(root, known)
        line = self.lines[root]
        if isinstance(line.rule, AxiomRule):
            if self.system.is_boolean_axiom(line.rule.index):
                raise InputError(f"search ended on boolean axiom {line.rule.index} at L{root}")
            return Leaf(line.rule.index)

        sizes = self._subtree_sizes(root, known)
        size = sizes[root]
        pivot = min((v for v in sizes if v != root), key=lambda v: (max(sizes[v], size - sizes[v]), v))
        split = SplitRecord(size=size, false_size=sizes[pivot], true_size=size - sizes[pivot])
        self.splits.append(split)
        logger.debug("L%d (%d live lines): query L%d, split %d/%d",
                     root, size, pivot, split.false_size, split.true_size)

        if_false = self._build(pivot, known)
        if_true = self._build(root, self._mark_true(pivot, known))
        return QueryNode(query=self.lines[pivot].stated, if_false=if_false, if_true=if_true)

    def build(self) -> SearchTree:
        """Verify the proof as tree-like and construct its decision tree.

        Returns:
            SearchTree whose every root-leaf path ends on a falsified axiom

        Raises:
            ProofError: If the proof does not verify as a tree-like refutation
        """
        result = verify_proof(self.proof, self.system, require_tree=True)
        if not result.ok:
            raise ProofError(result.violation)
        self.splits = []
        known = self._initial_known()
        if self.proof.final.id in known:
            raise InputError("final line follows from the boolean axioms alone")
        tree = SearchTree(n=self.system.n, root=self._build(self.proof.final.id, known))
        logger.info("built search tree: %d proof lines, %d queries", self.proof.size, len(self.splits))
        return tree


def build_search_tree(proof: Proof, system: System) -> SearchTree:
    """Threshold decision tree of depth at most ceil(log_{3/2} S) + 1.

    Args:
        proof: Tree-like refutation of system
        system: The refuted system

    Returns:
        SearchTree solving the falsified-axiom search for system
    """
    return SearchTreeBuilder(proof, system).build()
