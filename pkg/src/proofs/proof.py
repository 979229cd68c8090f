"""Cutting Planes proofs: lines, rules, the proof file format and mutants."""

import re
from collections import Counter
from dataclasses import dataclass, replace
from typing import Iterator, Optional, Union

from src.core.errors import ParseError
from src.proofs.inequality import INTEGER, LinearInequality, parse_inequality
from src.proofs.system import System

TREE_LIKE_DIRECTIVE = "tree-like"

_LINE_ID = re.compile(r"^L([1-9][0-9]*):?$")
_PREMISE = re.compile(r"^L([1-9][0-9]*)$")


@dataclass(frozen=True)
class AxiomRule:
    """Restate axiom number `index` of the system."""
    index: int
    tag = "axiom"

    @property
    def premises(self) -> tuple[int, ...]:
        return ()

    def __str__(self) -> str:
        return f"axiom {self.index}"


@dataclass(frozen=True)
class AddRule:
    """Sum of two earlier lines."""
    left: int
    right: int
    tag = "add"

    @property
    def premises(self) -> tuple[int, ...]:
        return (self.left, self.right)

    def __str__(self) -> str:
        return f"add L{self.left} L{self.right}"


@dataclass(frozen=True)
class MulRule:
    """Earlier line scaled by a nonzero integer."""
    scalar: int
    premise: int
    tag = "mul"

    @property
    def premises(self) -> tuple[int, ...]:
        return (self.premise,)

    def __str__(self) -> str:
        return f"mul {self.scalar} L{self.premise}"


@dataclass(frozen=True)
class DivRule:
    """Earlier line divided by an integer >= 2 with the bound rounded down."""
    divisor: int
    premise: int
    tag = "div"

    @property
    def premises(self) -> tuple[int, ...]:
        return (self.premise,)

    def __str__(self) -> str:
        return f"div {self.divisor} L{self.premise}"


Rule = Union[AxiomRule, AddRule, MulRule, DivRule]


@dataclass(frozen=True)
class ProofLine:
    """One proof step with the inequality it claims to derive."""
    id: int
    rule: Rule
    stated: LinearInequality

    def __str__(self) -> str:
        return f"L{self.id}: {self.rule} ; {self.stated.tokens()}"


@dataclass(frozen=True)
class Proof:
    """Ordered proof lines; the last one should be arithmetically false."""
    lines: tuple[ProofLine, ...]
    claims_tree: bool = False

    @property
    def size(self) -> int:
        return len(self.lines)

    @property
    def final(self) -> ProofLine:
        return self.lines[-1]

    def premise_uses(self) -> Counter:
        """How many times each line id appears as a premise."""
        return Counter(p for line in self.lines for p in line.rule.premises)

    def is_tree_like(self) -> bool:
        """True iff no line is used as a premise more than once."""
        return all(count <= 1 for count in self.premise_uses().values())


def _parse_premise(token: str, source: str, line_no: int) -> int:
    match = _PREMISE.match(token)
    if match is None:
        raise ParseError(f"expected a line reference like L3, got {token!r}", source, line_no)
    return int(match.group(1))


def _parse_int(token: str, what: str, source: str, line_no: int) -> int:
    if not INTEGER.fullmatch(token):
        raise ParseError(f"{what} {token!r} is not an integer", source, line_no)
    return int(token)


def _parse_rule(tokens: list[str], source: str, line_no: int) -> Rule:
    if not tokens:
        raise ParseError("missing rule", source, line_no)
    tag, args = tokens[0].lower(), tokens[1:]
    expected = {"axiom": 1, "add": 2, "mul": 2, "div": 2}
    if tag not in expected:
        raise ParseError(f"unknown rule {tokens[0]!r}", source, line_no)
    if len(args) != expected[tag]:
        raise ParseError(f"{tag} takes {expected[tag]} arguments, got {len(args)}", source, line_no)

    if tag == "axiom":
        return AxiomRule(_parse_int(args[0], "axiom index", source, line_no))
    if tag == "add":
        return AddRule(_parse_premise(args[0], source, line_no), _parse_premise(args[1], source, line_no))
    scalar = _parse_int(args[0], "scalar", source, line_no)
    premise = _parse_premise(args[1], source, line_no)
    return MulRule(scalar, premise) if tag == "mul" else DivRule(scalar, premise)


def parse_proof(text: str, n: int, source: str = "<string>") -> Proof:
    """Parse the proof format.

    Each content line reads `Lk: <rule> ; a_1 ... a_n c` where <rule> is
    `axiom j`, `add Li Lj`, `mul d Li` or `div c Li`. Lines must be
    numbered 1, 2, 3, ... in order. A line holding only `tree-like`
    records that the proof claims to be tree-like. Blank lines and '#'
    comments are skipped.

    Args:
        text: File contents
        n: Number of variables of the system being refuted
        source: Name used in diagnostics

    Returns:
        The parsed Proof (not yet verified)
    """
    lines: list[ProofLine] = []
    claims_tree = False
    for line_no, raw in enumerate(text.splitlines(), 1):
        content = raw.split("#", 1)[0].strip()
        if not content:
            continue
        if content.lower() == TREE_LIKE_DIRECTIVE:
            claims_tree = True
            continue

        head, sep, stated_text = content.partition(";")
        if not sep:
            raise ParseError("missing ';' before the stated inequality", source, line_no)
        head_tokens = head.split()
        if not head_tokens:
            raise ParseError("missing line label", source, line_no)
        match = _LINE_ID.match(head_tokens[0])
        if match is None:
            raise ParseError(f"expected a label like L1:, got {head_tokens[0]!r}", source, line_no)
        line_id = int(match.group(1))
        if line_id != len(lines) + 1:
            raise ParseError(f"line label L{line_id} out of sequence, expected L{len(lines) + 1}", source, line_no)

        rule = _parse_rule(head_tokens[1:], source, line_no)
        stated = parse_inequality(stated_text.split(), n, source, line_no)
        lines.append(ProofLine(id=line_id, rule=rule, stated=stated))

    if not lines:
        raise ParseError("proof has no lines", source)
    return Proof(lines=tuple(lines), claims_tree=claims_tree)


def format_proof(proof: Proof) -> str:
    """Write a proof in the format parse_proof reads."""
    out = [TREE_LIKE_DIRECTIVE] if proof.claims_tree else []
    out.extend(str(line) for line in proof.lines)
    return "\n".join(out) + "\n"


@dataclass(frozen=True)
class Mutant:
    """A proof with exactly one token changed."""
    line_id: int
    description: str
    proof: Proof


def _swap_tag(line: ProofLine, previous: Optional[ProofLine]) -> Rule:
    rule = line.rule
    if isinstance(rule, AddRule):
        return MulRule(1, rule.left)
    if isinstance(rule, MulRule):
        return DivRule(rule.scalar if rule.scalar >= 2 else 2, rule.premise)
    if isinstance(rule, DivRule):
        return MulRule(rule.divisor, rule.premise)
    # an axiom turned into a derived step; on line 1 it can only point at itself
    return MulRule(1, previous.id if previous is not None else line.id)


def _line_mutations(line: ProofLine, previous: Optional[ProofLine], system: System) -> Iterator[tuple[str, ProofLine]]:
    stated = line.stated
    for i in range(stated.n):
        coefficients = tuple(a + 1 if k == i else a for k, a in enumerate(stated.coefficients))
        yield f"coefficient {i + 1} +1", replace(line, stated=LinearInequality(coefficients, stated.bound))
    yield "bound +1", replace(line, stated=LinearInequality(stated.coefficients, stated.bound + 1))

    rule = line.rule
    if isinstance(rule, AxiomRule):
        count = system.axiom_count
        if 1 <= rule.index <= count:
            target = rule.index % count + 1
            if system.axiom(target) != system.axiom(rule.index):
                yield f"axiom {rule.index} -> {target}", replace(line, rule=AxiomRule(target))
    elif isinstance(rule, MulRule):
        yield "scalar +1", replace(line, rule=MulRule(rule.scalar + 1, rule.premise))
    elif isinstance(rule, DivRule):
        yield "divisor +1", replace(line, rule=DivRule(rule.divisor + 1, rule.premise))

    if isinstance(rule, AddRule):
        yield "left premise -> self", replace(line, rule=AddRule(line.id, rule.right))
        yield "right premise -> self", replace(line, rule=AddRule(rule.left, line.id))
    elif isinstance(rule, MulRule):
        yield "premise -> self", replace(line, rule=MulRule(rule.scalar, line.id))
    elif isinstance(rule, DivRule):
        yield "premise -> self", replace(line, rule=DivRule(rule.divisor, line.id))

    swapped = _swap_tag(line, previous)
    yield f"rule {rule.tag} -> {swapped.tag}", replace(line, rule=swapped)


def mutate_proof(proof: Proof, system: System) -> Iterator[Mutant]:
    """Yield single-token mutants of every line.

    Covers each stated coefficient and bound, the axiom index, the scalar
    or divisor, each premise reference and the rule tag. Axiom-index
    mutants that land on an identical axiom are skipped.

    Args:
        proof: Proof to mutate
        system: System the proof refutes

    Yields:
        Mutant records
    """
    for position, line in enumerate(proof.lines):
        previous = proof.lines[position - 1] if position > 0 else None
        for description, mutated in _line_mutations(line, previous, system):
            lines = proof.lines[:position] + (mutated,) + proof.lines[position + 1:]
            yield Mutant(line_id=line.id, description=description,
                         proof=Proof(lines=lines, claims_tree=proof.claims_tree))
