"""Threshold decision trees whose leaves name axioms."""

import re
from dataclasses import dataclass
from typing import Iterator, Sequence, Union

from src.core.errors import InputError, ParseError
from src.proofs.inequality import LinearInequality, parse_inequality


@dataclass(frozen=True)
class Leaf:
    """Answer: axiom number `axiom` is falsified."""
    axiom: int


@dataclass(frozen=True)
class QueryNode:
    """Ask whether `query` holds; the 0-edge is taken when it is falsified."""
    query: LinearInequality
    if_false: 'SearchNode'
    if_true: 'SearchNode'


SearchNode = Union[Leaf, QueryNode]


@dataclass(frozen=True)
class SearchTree:
    """A threshold decision tree over n variables."""
    n: int
    root: SearchNode

    def nodes(self) -> Iterator[SearchNode]:
        """All nodes in preorder (node, 0-subtree, 1-subtree)."""
        stack = [self.root]
        while stack:
            node = stack.pop()
            yield node
            if isinstance(node, QueryNode):
                stack.append(node.if_true)
                stack.append(node.if_false)

    def queries(self) -> list[LinearInequality]:
        return [node.query for node in self.nodes() if isinstance(node, QueryNode)]

    def leaves(self) -> list[int]:
        return [node.axiom for node in self.nodes() if isinstance(node, Leaf)]


def depth(tree: SearchTree) -> int:
    """Length of the longest root-leaf path; a lone leaf has depth 0."""
    deepest = 0
    stack = [(tree.root, 0)]
    while stack:
        node, level = stack.pop()
        if isinstance(node, Leaf):
            deepest = max(deepest, level)
        else:
            stack.append((node.if_false, level + 1))
            stack.append((node.if_true, level + 1))
    return deepest


def eval_search_tree(tree: SearchTree, alpha: Sequence[int]) -> int:
    """Follow the edges chosen by alpha and return the leaf's axiom.

    Args:
        tree: Search tree
        alpha: Full assignment of length tree.n

    Returns:
        Axiom index at the reached leaf
    """
    if len(alpha) != tree.n:
        raise InputError(f"assignment has length {len(alpha)}, expected {tree.n}")
    node = tree.root
    while isinstance(node, QueryNode):
        node = node.if_true if node.query.satisfied_by(alpha) else node.if_false
    return node.axiom


def format_search_tree(tree: SearchTree) -> str:
    """Serialize to node records, root first as N0.

    Query records read `N<id>: query a_1 ... a_n c -> N<false> N<true>`;
    leaf records read `N<id>: leaf <axiom>`. Ids follow preorder.
    """
    records: list[str] = []

    def emit(node: SearchNode) -> int:
        node_id = len(records)
        if isinstance(node, Leaf):
            records.append(f"N{node_id}: leaf {node.axiom}")
            return node_id
        records.append("")
        false_id = emit(node.if_false)
        true_id = emit(node.if_true)
        records[node_id] = f"N{node_id}: query {node.query.tokens()} -> N{false_id} N{true_id}"
        return node_id

    emit(tree.root)
    return "\n".join(records) + "\n"


_RECORD = re.compile(r"^N([0-9]+):\s*(leaf|query)\s+(.*)$")
_NODE_REF = re.compile(r"^N([0-9]+)$")


def parse_search_tree(text: str, n: int, source: str = "<string>") -> SearchTree:
    """Read the format written by format_search_tree.

    Args:
        text: Serialized tree
        n: Number of variables
        source: Name used in diagnostics

    Returns:
        The SearchTree rooted at N0
    """
    leaves: dict[int, int] = {}
    queries: dict[int, tuple[LinearInequality, int, int, int]] = {}
    for line_no, raw in enumerate(text.splitlines(), 1):
        content = raw.split("#", 1)[0].strip()
        if not content:
            continue
        match = _RECORD.match(content)
        if match is None:
            raise ParseError(f"unrecognized record {content!r}", source, line_no)
        node_id, kind, rest = int(match.group(1)), match.group(2), match.group(3)
        if node_id in leaves or node_id in queries:
            raise ParseError(f"duplicate node N{node_id}", source, line_no)

        if kind == "leaf":
            axiom = rest.strip()
            if not re.fullmatch(r"[0-9]+", axiom):
                raise ParseError(f"leaf axiom {axiom!r} is not a positive integer", source, line_no)
            leaves[node_id] = int(axiom)
            continue

        lhs, arrow, children = rest.partition("->")
        refs = children.split()
        if not arrow or len(refs) != 2 or not all(_NODE_REF.match(ref) for ref in refs):
            raise ParseError("query records end with '-> N<false> N<true>'", source, line_no)
        query = parse_inequality(lhs.split(), n, source, line_no)
        queries[node_id] = (query, int(refs[0][1:]), int(refs[1][1:]), line_no)

    if 0 not in leaves and 0 not in queries:
        raise ParseError("missing root node N0", source)

    built: dict[int, SearchNode] = {}
    visiting: set[int] = set()

    def build(node_id: int) -> SearchNode:
        if node_id in built:
            raise ParseError(f"N{node_id} has more than one parent", source)
        if node_id in leaves:
            built[node_id] = Leaf(leaves[node_id])
            return built[node_id]
        if node_id not in queries:
            raise ParseError(f"reference to undefined node N{node_id}", source)
        if node_id in visiting:
            raise ParseError(f"cycle through N{node_id}", source, queries[node_id][3])
        visiting.add(node_id)
        query, false_id, true_id, _ = queries[node_id]
        built[node_id] = QueryNode(query, build(false_id), build(true_id))
        return built[node_id]

    root = build(0)
    unreachable = (set(leaves) | set(queries)) - set(built)
    if unreachable:
        raise ParseError(f"nodes not reachable from N0: {sorted(unreachable)}", source)
    return SearchTree(n=n, root=root)
