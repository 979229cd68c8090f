"""Cutting Planes systems, proofs and their verifier."""

from src.proofs.inequality import LinearInequality, parse_inequality
from src.proofs.system import (
    System,
    assignments,
    find_satisfying_assignment,
    format_system,
    parse_system,
)
from src.proofs.proof import (
    AddRule,
    AxiomRule,
    DivRule,
    MulRule,
    Mutant,
    Proof,
    ProofLine,
    Rule,
    format_proof,
    mutate_proof,
    parse_proof,
)
from src.proofs.verifier import VerificationResult, Violation, check_line, is_false_line, verify_proof

__all__ = [
    "LinearInequality",
    "parse_inequality",
    "System",
    "assignments",
    "find_satisfying_assignment",
    "format_system",
    "parse_system",
    "AddRule",
    "AxiomRule",
    "DivRule",
    "MulRule",
    "Mutant",
    "Proof",
    "ProofLine",
    "Rule",
    "format_proof",
    "mutate_proof",
    "parse_proof",
    "VerificationResult",
    "Violation",
    "check_line",
    "is_false_line",
    "verify_proof",
]
