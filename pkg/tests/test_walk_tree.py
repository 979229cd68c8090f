"""Tests for walk parameters and the walk tree."""

import pytest

from src.core.errors import InputError
from src.protocols.walk_tree import NodeKind, WalkParams, build_walk_tree, log2_inverse, walk_bit_bound


class TestWalkParams:
    """Tests for WalkParams defaults and validation."""

    def test_for_error_defaults(self):
        """Test n=16, eps=2^-4: chain 4*4+4 = 20, steps 8*(4+4)+20 = 84."""
        params = WalkParams.for_error(16, 1 / 16)
        assert params.chain_len == 20
        assert params.steps == 84
        assert params.per_check_k == 2

    def test_step_bits_and_bound(self):
        """Test B = 3k + 2 and the bound B*m + 2."""
        params = WalkParams(epsilon=0.1, chain_len=5, steps=30, per_check_k=2)
        assert params.step_bits == 8
        assert walk_bit_bound(params) == 8 * 30 + 2

    def test_bound_grows_linearly_in_log_n(self):
        """Test the bound difference between n=16 and n=256 is 8 * B * (8 - 4)."""
        eps = 0.01
        small = walk_bit_bound(WalkParams.for_error(16, eps))
        large = walk_bit_bound(WalkParams.for_error(256, eps))
        assert large - small == 8 * 8 * (8 - 4)

    def test_log2_inverse(self):
        """Test ceil(log2(1/eps))."""
        assert log2_inverse(0.5) == 1
        assert log2_inverse(0.1) == 4
        assert log2_inverse(1 / 64) == 6

    @pytest.mark.parametrize("kwargs", [
        dict(epsilon=0.0, chain_len=3, steps=10),
        dict(epsilon=0.1, chain_len=0, steps=10),
        dict(epsilon=0.1, chain_len=5, steps=4),
        dict(epsilon=0.1, chain_len=3, steps=10, per_check_k=0),
    ])
    def test_invalid_parameters(self, kwargs):
        """Test that invalid parameters are rejected."""
        with pytest.raises(InputError):
            WalkParams(**kwargs)

    def test_check_length(self):
        """Test that steps must cover the search depth plus the chain."""
        params = WalkParams(epsilon=0.1, chain_len=3, steps=5)
        params.check_length(4)
        with pytest.raises(InputError):
            params.check_length(8)


class TestWalkTree:
    """Tests for the walk tree shape."""

    def test_node_counts(self):
        """Test n=4: 3 internal nodes, 4 leaves, 4 chains of chain_len nodes."""
        params = WalkParams(epsilon=0.1, chain_len=3, steps=10)
        tree = build_walk_tree(4, params)
        kinds = [node.kind for node in tree.nodes]
        assert kinds.count(NodeKind.INTERNAL) == 3
        assert kinds.count(NodeKind.LEAF) == 4
        assert kinds.count(NodeKind.CHAIN) == 12

    def test_four_bits_worked_example(self):
        """Test n=4, chain_len=3: leaves at depth 2, 7 search nodes, 3 chain nodes under each leaf."""
        tree = build_walk_tree(4, WalkParams(epsilon=0.1, chain_len=3, steps=10))
        assert len(tree.search_nodes()) == 7
        assert all(tree.leaf(i).depth == 2 for i in range(1, 5))
        assert all(len(tree.chain(i)) == 3 for i in range(1, 5))

    def test_five_bits_unbalanced(self):
        """Test n=5: leaf intervals are exactly [i, i] and no leaf is deeper than 3."""
        tree = build_walk_tree(5, WalkParams(epsilon=0.1, chain_len=2, steps=10))
        leaves = [node for node in tree.nodes if node.kind is NodeKind.LEAF]
        assert sorted((node.lo, node.hi) for node in leaves) == [(i, i) for i in range(1, 6)]
        assert max(node.depth for node in leaves) <= 3
        assert len({node.depth for node in leaves}) == 2

    def test_root_covers_all_indices(self):
        """Test the root interval and that leaves cover 1..n once."""
        tree = build_walk_tree(5, WalkParams(epsilon=0.1, chain_len=2, steps=10))
        assert (tree.root.lo, tree.root.hi) == (1, 5)
        assert sorted(tree.leaf_ids) == [1, 2, 3, 4, 5]

    def test_leaf_depth_bounded(self):
        """Test every leaf sits at depth <= ceil(log2 n)."""
        tree = build_walk_tree(13, WalkParams(epsilon=0.1, chain_len=2, steps=10))
        assert all(tree.leaf(i).depth <= tree.search_depth for i in range(1, 14))

    def test_children_split_interval(self):
        """Test that internal children partition the parent interval at mid."""
        tree = build_walk_tree(7, WalkParams(epsilon=0.1, chain_len=2, steps=10))
        for node in tree.nodes:
            if node.kind is NodeKind.INTERNAL:
                left, right = (tree.node(c) for c in node.children)
                assert (left.lo, left.hi) == (node.lo, node.mid)
                assert (right.lo, right.hi) == (node.mid + 1, node.hi)

    def test_chain_below_leaf(self):
        """Test the chain under a leaf has chain_len nodes of its index."""
        tree = build_walk_tree(4, WalkParams(epsilon=0.1, chain_len=3, steps=10))
        chain = tree.chain(3)
        assert [node.chain_pos for node in chain] == [1, 2, 3]
        assert all(node.index == 3 and node.kind is NodeKind.CHAIN for node in chain)
        assert chain[0].parent == tree.leaf(3).id

    def test_single_bit_tree(self):
        """Test n=1: the root is a leaf."""
        tree = build_walk_tree(1, WalkParams(epsilon=0.1, chain_len=2, steps=5))
        assert tree.root.kind is NodeKind.LEAF
        assert len(tree.chain(1)) == 2

    def test_trees_are_cached(self):
        """Test that equal (n, chain_len) share one tree."""
        params = WalkParams(epsilon=0.1, chain_len=3, steps=10)
        assert build_walk_tree(6, params) is build_walk_tree(6, params)
