"""Bundled unsatisfiable systems with hand-written tree-like refutations."""

from dataclasses import dataclass
from typing import Optional

from src.proofs.proof import Proof, parse_proof
from src.proofs.system import System, parse_system


@dataclass(frozen=True)
class ProofExample:
    """A system and a refutation of it, both in file format."""
    id: str
    description: str
    n: int
    system_text: str
    proof_text: str
    lines: int  # Number of proof lines

    def system(self) -> System:
        return parse_system(self.system_text, source=f"{self.id}.sys")

    def proof(self) -> Proof:
        return parse_proof(self.proof_text, self.n, source=f"{self.id}.proof")


EXAMPLES: dict[str, ProofExample] = {
    "single": ProofExample(
        id="single",
        description="x >= 1 and x <= 0",
        n=1,
        system_text=(
            "1\n"
            "-1 -1\n"
            "1 0\n"
        ),
        proof_text=(
            "tree-like\n"
            "L1: axiom 1 ; -1 -1\n"
            "L2: axiom 2 ; 1 0\n"
            "L3: add L1 L2 ; 0 -1\n"
        ),
        lines=3,
    ),
    "pair": ProofExample(
        id="pair",
        description="x1 + x2 >= 1, x1 <= 0, x2 <= 0",
        n=2,
        system_text=(
            "2\n"
            "-1 -1 -1\n"
            "1 0 0\n"
            "0 1 0\n"
        ),
        proof_text=(
            "tree-like\n"
            "L1: axiom 1 ; -1 -1 -1\n"
            "L2: axiom 2 ; 1 0 0\n"
            "L3: add L1 L2 ; 0 -1 -1\n"
            "L4: axiom 3 ; 0 1 0\n"
            "L5: add L3 L4 ; 0 0 -1\n"
        ),
        lines=5,
    ),
    "halving": ProofExample(
        id="halving",
        description="2x1 + 2x2 = 1 has no integer solution",
        n=2,
        system_text=(
            "2\n"
            "2 2 1\n"
            "-2 -2 -1\n"
        ),
        proof_text=(
            "tree-like\n"
            "L1: axiom 1 ; 2 2 1\n"
            "L2: div 2 L1 ; 1 1 0\n"
            "L3: mul 2 L2 ; 2 2 0\n"
            "L4: axiom 2 ; -2 -2 -1\n"
            "L5: add L3 L4 ; 0 0 -1\n"
        ),
        lines=5,
    ),
    "triangle": ProofExample(
        id="triangle",
        description="two of three variables set, but every pair sums to at most 1",
        n=3,
        system_text=(
            "3\n"
            "-1 -1 -1 -2\n"
            "1 1 0 1\n"
            "0 1 1 1\n"
            "1 0 1 1\n"
        ),
        proof_text=(
            "tree-like\n"
            "L1: axiom 2 ; 1 1 0 1\n"
            "L2: axiom 3 ; 0 1 1 1\n"
            "L3: add L1 L2 ; 1 2 1 2\n"
            "L4: axiom 4 ; 1 0 1 1\n"
            "L5: add L3 L4 ; 2 2 2 3\n"
            "L6: div 2 L5 ; 1 1 1 1\n"
            "L7: axiom 1 ; -1 -1 -1 -2\n"
            "L8: add L6 L7 ; 0 0 0 -1\n"
        ),
        lines=8,
    ),
    "trivial": ProofExample(
        id="trivial",
        description="the system already contains 0 <= -1",
        n=1,
        system_text=(
            "1\n"
            "0 -1\n"
        ),
        proof_text=(
            "tree-like\n"
            "L1: axiom 1 ; 0 -1\n"
        ),
        lines=1,
    ),
}


def get_example(example_id: str) -> Optional[ProofExample]:
    """Get a bundled example by ID.

    Args:
        example_id: Example ID

    Returns:
        ProofExample or None
    """
    return EXAMPLES.get(example_id)


def get_all_examples() -> list[ProofExample]:
    """Get all bundled examples."""
    return list(EXAMPLES.values())


def load_example(example_id: str) -> tuple[System, Proof]:
    """Parse a bundled example's system and proof.

    Raises:
        KeyError: If no example has that ID
    """
    example = EXAMPLES[example_id]
    return example.system(), example.proof()
