"""Bundled example systems and proofs."""

from src.data.proof_corpus import EXAMPLES, ProofExample, get_all_examples, get_example, load_example

__all__ = ["EXAMPLES", "ProofExample", "get_all_examples", "get_example", "load_example"]
