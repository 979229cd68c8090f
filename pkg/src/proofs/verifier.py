"""Line-by-line checking of Cutting Planes proofs."""

import logging
from dataclasses import dataclass
from typing import Callable, Optional

from src.core.errors import InputError
from src.proofs.inequality import LinearInequality
from src.proofs.proof import AddRule, AxiomRule, DivRule, MulRule, Proof, ProofLine
from src.proofs.system import System

logger = logging.getLogger(__name__)

Resolver = Callable[[int], Optional[LinearInequality]]


@dataclass(frozen=True)
class Violation:
    """First problem found in a proof."""
    line_id: Optional[int]
    rule: str
    message: str

    def __str__(self) -> str:
        where = f"L{self.line_id}" if self.line_id is not None else "proof"
        return f"{where} ({self.rule}): {self.message}"


@dataclass(frozen=True)
class VerificationResult:
    """Outcome of verify_proof."""
    violation: Optional[Violation]
    lines: int
    tree_like: bool

    @property
    def ok(self) -> bool:
        return self.violation is None


def is_false_line(ineq: LinearInequality) -> bool:
    """True iff ineq is 0.x <= c with c < 0."""
    return ineq.is_contradiction()


def _mismatch(expected: LinearInequality, stated: LinearInequality) -> Optional[str]:
    if expected == stated:
        return None
    return f"stated {stated.tokens()!r} but the rule yields {expected.tokens()!r}"


def check_line(line: ProofLine, resolver: Resolver, system: System) -> Optional[str]:
    """Check one line against its rule.

    Args:
        line: Line to check
        resolver: Maps a premise id to its stated inequality, or None if
            the id is not an earlier line
        system: System being refuted

    Returns:
        None if the line is correct, else a description of the problem
    """
    rule = line.rule
    if line.stated.n != system.n:
        return f"stated inequality has {line.stated.n} coefficients, expected {system.n}"

    premises = []
    for premise_id in rule.premises:
        premise = resolver(premise_id)
        if premise is None:
            return f"L{premise_id} is not an earlier line"
        premises.append(premise)

    if isinstance(rule, AxiomRule):
        try:
            axiom = system.axiom(rule.index)
        except InputError as exc:
            return str(exc)
        return _mismatch(axiom, line.stated)

    if isinstance(rule, AddRule):
        return _mismatch(premises[0].add(premises[1]), line.stated)

    if isinstance(rule, MulRule):
        if rule.scalar == 0:
            return "scalar must be nonzero"
        return _mismatch(premises[0].scale(rule.scalar), line.stated)

    if isinstance(rule, DivRule):
        if rule.divisor < 2:
            return f"divisor must be at least 2, got {rule.divisor}"
        for i, a in enumerate(premises[0].coefficients, 1):
            if a % rule.divisor != 0:
                return f"coefficient {i} ({a}) of L{rule.premise} is not divisible by {rule.divisor}"
        return _mismatch(premises[0].divide(rule.divisor), line.stated)

    return f"unknown rule {rule!r}"


def verify_proof(proof: Proof, system: System, require_tree: bool = False) -> VerificationResult:
    """Check every line, the final contradiction and optionally tree-likeness.

    Args:
        proof: Proof to check
        system: System it claims to refute
        require_tree: Reject proofs that use a line as a premise twice

    Returns:
        VerificationResult carrying the earliest violation, if any
    """
    tree_like = proof.is_tree_like()

    def result(violation: Optional[Violation]) -> VerificationResult:
        if violation is not None:
            logger.info("proof rejected: %s", violation)
        return VerificationResult(violation=violation, lines=proof.size, tree_like=tree_like)

    if not proof.lines:
        return result(Violation(None, "proof", "proof has no lines"))

    derived: dict[int, LinearInequality] = {}
    uses: dict[int, int] = {}
    for line in proof.lines:
        if line.id in derived:
            return result(Violation(line.id, line.rule.tag, f"duplicate line id L{line.id}"))
        problem = check_line(line, derived.get, system)
        if problem is not None:
            return result(Violation(line.id, line.rule.tag, problem))
        if require_tree:
            for premise_id in line.rule.premises:
                uses[premise_id] = uses.get(premise_id, 0) + 1
                if uses[premise_id] > 1:
                    return result(Violation(line.id, line.rule.tag,
                                            f"L{premise_id} used as a premise more than once"))
        derived[line.id] = line.stated
        logger.debug("L%d ok: %s", line.id, line.stated)

    if not is_false_line(proof.final.stated):
        return result(Violation(proof.final.id, proof.final.rule.tag,
                                f"final line {proof.final.stated.tokens()!r} is not arithmetically false"))
    return result(None)
