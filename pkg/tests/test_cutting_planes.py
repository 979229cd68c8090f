"""Tests for inequalities, systems, proofs and the verifier."""

import pytest

from src.core.errors import InputError, ParseError
from src.data.proof_corpus import get_all_examples
from src.proofs.inequality import LinearInequality
from src.proofs.proof import (
    AddRule,
    AxiomRule,
    DivRule,
    MulRule,
    Proof,
    ProofLine,
    format_proof,
    mutate_proof,
    parse_proof,
)
from src.proofs.system import assignments, find_satisfying_assignment, format_system, parse_system
from src.proofs.verifier import check_line, is_false_line, verify_proof


def ineq(*values: int) -> LinearInequality:
    """Shorthand: ineq(a_1, ..., a_n, c)."""
    return LinearInequality(tuple(values[:-1]), values[-1])


class TestLinearInequality:
    """Tests for the inequality arithmetic."""

    def test_at_least_normalizes(self):
        """Test d.x >= e is stored as (-d).x <= -e."""
        assert LinearInequality.at_least((1, 1), 1) == ineq(-1, -1, -1)

    def test_negative_scale_flips_back_to_le(self):
        """Test scaling by -2 reverses and renormalizes."""
        assert ineq(1, -1, 3).scale(-2) == ineq(2, -2, 6)
        assert ineq(1, -1, 3).scale(3) == ineq(3, -3, 9)

    def test_divide_rounds_bound_down(self):
        """Test 2x1 + 2x2 <= 3 divided by 2 gives x1 + x2 <= 1."""
        assert ineq(2, 2, 3).divide(2) == ineq(1, 1, 1)
        assert ineq(2, 2, -3).divide(2) == ineq(1, 1, -2)

    def test_divide_requires_divisibility(self):
        """Test 2x1 + x2 is not divisible by 2."""
        with pytest.raises(InputError):
            ineq(2, 1, 3).divide(2)

    @pytest.mark.parametrize("line,expected", [
        (ineq(0, -1), True),
        (ineq(0, 0), False),
        (ineq(1, -5), False),
    ])
    def test_is_false_line(self, line, expected):
        """Test arithmetically false lines."""
        assert is_false_line(line) is expected


class TestParseSystem:
    """Tests for the system format."""

    def test_three_axioms(self):
        """Test the example system with a comment and a blank line."""
        system = parse_system("2\n-1 0 -1  # x1 >= 1\n\n1 0 0\n0 1 0\n")
        assert system.n == 2
        assert system.axioms == (ineq(-1, 0, -1), ineq(1, 0, 0), ineq(0, 1, 0))

    def test_empty_axiom_list(self):
        """Test a system with no axioms is valid."""
        assert parse_system("3\n").axioms == ()

    def test_non_integer_names_line(self):
        """Test a parse error carries the line number."""
        with pytest.raises(ParseError) as info:
            parse_system("1\n1.5 0\n", source="bad.sys")
        assert info.value.line_no == 2
        assert str(info.value).startswith("bad.sys:2:")

    def test_wrong_token_count(self):
        """Test lines with the wrong number of integers are rejected."""
        with pytest.raises(ParseError):
            parse_system("2\n1 0\n")

    @pytest.mark.parametrize("text", ["²\n", "٣\n", "1\n¹ 0\n", "1\n1_0 0\n"])
    def test_non_ascii_digits_rejected(self, text):
        """Test superscript, Arabic-Indic and underscored numbers are parse errors."""
        with pytest.raises(ParseError):
            parse_system(text, source="odd.sys")

    def test_format_round_trip(self, pair_example):
        """Test format_system writes what parse_system reads."""
        system, _ = pair_example
        assert parse_system(format_system(system)) == system

    def test_boolean_axioms(self):
        """Test implicit axioms: |A|+2i-1 is x_i >= 0, |A|+2i is x_i <= 1."""
        system = parse_system("2\n1 1 5\n")
        assert system.axiom_count == 5
        assert system.axiom(2) == ineq(-1, 0, 0)
        assert system.axiom(3) == ineq(1, 0, 1)
        assert system.axiom(4) == ineq(0, -1, 0)
        assert system.axiom(5) == ineq(0, 1, 1)
        with pytest.raises(InputError):
            system.axiom(6)

    def test_boolean_axioms_disabled(self):
        """Test that disabling boolean axioms hides them."""
        system = parse_system("2\n1 1 5\n", boolean_axioms=False)
        with pytest.raises(InputError):
            system.axiom(2)


class TestParseProof:
    """Tests for the proof format."""

    def test_rules_parsed(self, halving_example):
        """Test every rule kind and the tree-like directive."""
        _, proof = halving_example
        assert proof.claims_tree is True
        assert [type(line.rule) for line in proof.lines] == [AxiomRule, DivRule, MulRule, AxiomRule, AddRule]
        assert proof.lines[1].rule == DivRule(2, 1)

    def test_format_round_trip(self, any_example):
        """Test format_proof writes what parse_proof reads."""
        system, proof = any_example
        assert parse_proof(format_proof(proof), system.n) == proof

    @pytest.mark.parametrize("text", [
        "L1: axiom 1 -1 -1",
        "L2: axiom 1 ; -1 -1",
        "L1: frobnicate 1 ; -1 -1",
        "L1: add L1 ; 0 -1",
        "L1: mul x L1 ; 0 -1",
        "L1: axiom 1 ; -1",
        "L1: axiom \u00b9 ; -1 -1",
        "L1: mul \u0662 L1 ; 0 -1",
        "",
    ])
    def test_malformed(self, text):
        """Test syntax errors are reported as ParseError."""
        with pytest.raises(ParseError):
            parse_proof(text, 1)


class TestCheckLine:
    """Tests for individual rule checks."""

    def test_add(self, single_example):
        """Test Add of -x <= -1 and x <= 0 stating 0 <= -1."""
        system, _ = single_example
        known = {1: ineq(-1, -1), 2: ineq(1, 0)}
        assert check_line(ProofLine(3, AddRule(1, 2), ineq(0, -1)), known.get, system) is None

    def test_div(self):
        """Test Div by 2 of 2x1 + 2x2 <= 3."""
        system = parse_system("2\n2 2 3\n")
        known = {1: ineq(2, 2, 3)}
        assert check_line(ProofLine(2, DivRule(2, 1), ineq(1, 1, 1)), known.get, system) is None

    def test_div_divisibility_violation(self):
        """Test Div by 2 of 2x1 + x2 <= 3 names the coefficient."""
        system = parse_system("2\n2 1 3\n")
        problem = check_line(ProofLine(2, DivRule(2, 1), ineq(1, 0, 1)), {1: ineq(2, 1, 3)}.get, system)
        assert problem is not None and "coefficient 2" in problem

    def test_mul_by_zero(self):
        """Test scalar 0 is rejected."""
        system = parse_system("1\n1 0\n")
        assert check_line(ProofLine(2, MulRule(0, 1), ineq(0, 0)), {1: ineq(1, 0)}.get, system) is not None

    def test_forward_reference(self):
        """Test a premise that is not an earlier line."""
        system = parse_system("1\n1 0\n")
        problem = check_line(ProofLine(1, MulRule(2, 1), ineq(2, 0)), {}.get, system)
        assert "not an earlier line" in problem


class TestVerifyProof:
    """Tests for whole-proof verification."""

    def test_bundled_proofs_verify(self, any_example):
        """Test every bundled proof is a valid tree-like refutation."""
        system, proof = any_example
        result = verify_proof(proof, system, require_tree=True)
        assert result.ok, result.violation
        assert result.tree_like

    def test_wrong_final_statement(self, single_example):
        """Test L3 stating 0 <= 0 is an arithmetic mismatch at L3."""
        system, proof = single_example
        bad = Proof(proof.lines[:2] + (ProofLine(3, AddRule(1, 2), ineq(0, 0)),))
        result = verify_proof(bad, system)
        assert not result.ok
        assert result.violation.line_id == 3
        assert result.violation.rule == "add"

    def test_not_ending_in_contradiction(self, single_example):
        """Test a correct proof whose last line is not 0 <= c < 0."""
        system, proof = single_example
        result = verify_proof(Proof(proof.lines[:2]), system)
        assert not result.ok
        assert "arithmetically false" in result.violation.message

    def test_dag_proof_rejected_when_tree_required(self, single_example):
        """Test reusing L1 twice: accepted as a DAG, rejected as tree-like."""
        system, _ = single_example
        dag = Proof((
            ProofLine(1, AxiomRule(1), ineq(-1, -1)),
            ProofLine(2, AddRule(1, 1), ineq(-2, -2)),
            ProofLine(3, AxiomRule(2), ineq(1, 0)),
            ProofLine(4, MulRule(2, 3), ineq(2, 0)),
            ProofLine(5, AddRule(2, 4), ineq(0, -2)),
        ))
        assert verify_proof(dag, system).ok
        result = verify_proof(dag, system, require_tree=True)
        assert not result.ok
        assert result.violation.line_id == 2

    def test_boolean_axiom_usable(self):
        """Test a refutation of x1 >= 2 through the implicit x1 <= 1."""
        system = parse_system("1\n-1 -2\n")
        proof = parse_proof("L1: axiom 1 ; -1 -2\nL2: axiom 3 ; 1 1\nL3: add L1 L2 ; 0 -1\n", 1)
        assert verify_proof(proof, system, require_tree=True).ok


class TestSoundnessOracle:
    """Semantic checks of the rules against brute force."""

    def test_every_line_follows_from_its_premises(self, any_example):
        """Test: alpha satisfying all premises satisfies the stated line."""
        system, proof = any_example
        stated = {line.id: line.stated for line in proof.lines}
        for line in proof.lines:
            for alpha in assignments(system.n):
                if isinstance(line.rule, AxiomRule):
                    continue
                if all(stated[p].satisfied_by(alpha) for p in line.rule.premises):
                    assert line.stated.satisfied_by(alpha)

    def test_verified_systems_are_unsatisfiable(self, any_example):
        """Test brute force finds no model for any refuted system."""
        system, proof = any_example
        assert verify_proof(proof, system).ok
        assert find_satisfying_assignment(system) is None

    def test_satisfiable_system_has_a_model(self):
        """Test brute force on x1 + x2 >= 1."""
        assert find_satisfying_assignment(parse_system("2\n-1 -1 -1\n")) == (0, 1)

    def test_brute_force_limit(self):
        """Test systems beyond the brute-force limit are refused."""
        with pytest.raises(InputError):
            find_satisfying_assignment(parse_system("13\n"))


class TestMutationResistance:
    """Every single-token mutant of a bundled proof is rejected."""

    @pytest.mark.parametrize("example", get_all_examples(), ids=lambda e: e.id)
    def test_all_mutants_rejected(self, example):
        """Test coefficient, bound, axiom, scalar, premise and tag mutants."""
        system, proof = example.system(), example.proof()
        mutants = list(mutate_proof(proof, system))
        assert mutants
        for mutant in mutants:
            result = verify_proof(mutant.proof, system, require_tree=True)
            assert not result.ok, f"L{mutant.line_id} {mutant.description} accepted"

    def test_mutants_cover_every_line(self, triangle_example):
        """Test each line contributes mutants."""
        system, proof = triangle_example
        lines = {mutant.line_id for mutant in mutate_proof(proof, system)}
        assert lines == {line.id for line in proof.lines}
