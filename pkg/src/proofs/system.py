"""Systems of linear inequalities over 0-1 variables."""

import itertools
import logging
import re
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from src.core.errors import InputError, ParseError
from src.core.settings import BOOLEAN_AXIOMS, MAX_BRUTE_FORCE_VARS
from src.proofs.inequality import LinearInequality, parse_inequality

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class System:
    """An ordered list of axioms over variables x_1..x_n.

    With boolean_axioms enabled, axioms past the explicit ones are the
    implicit bounds: number |axioms| + 2i - 1 is x_i >= 0 and number
    |axioms| + 2i is x_i <= 1.
    """
    n: int
    axioms: tuple[LinearInequality, ...]
    boolean_axioms: bool = BOOLEAN_AXIOMS

    def __post_init__(self):
        if self.n < 1:
            raise InputError(f"n must be positive, got {self.n}")
        for j, axiom in enumerate(self.axioms, 1):
            if axiom.n != self.n:
                raise InputError(f"axiom {j} has {axiom.n} coefficients, expected {self.n}")

    @property
    def explicit_count(self) -> int:
        return len(self.axioms)

    @property
    def axiom_count(self) -> int:
        """Explicit plus implicit axioms."""
        return self.explicit_count + (2 * self.n if self.boolean_axioms else 0)

    def is_boolean_axiom(self, j: int) -> bool:
        return self.boolean_axioms and self.explicit_count < j <= self.axiom_count

    def axiom(self, j: int) -> LinearInequality:
        """Resolve axiom number j (1-based).

        Args:
            j: Axiom index

        Returns:
            The explicit or implicit axiom

        Raises:
            InputError: If j names no axiom
        """
        if 1 <= j <= self.explicit_count:
            return self.axioms[j - 1]
        if not self.is_boolean_axiom(j):
            raise InputError(f"no axiom {j} (system has {self.axiom_count})")
        offset = j - self.explicit_count - 1
        i, upper = divmod(offset, 2)
        unit = tuple(1 if k == i else 0 for k in range(self.n))
        if upper:
            return LinearInequality(unit, 1)
        return LinearInequality.at_least(unit, 0)

    def falsified_axioms(self, alpha: Sequence[int]) -> list[int]:
        """Indices of the explicit axioms that alpha falsifies."""
        return [j for j, axiom in enumerate(self.axioms, 1) if not axiom.satisfied_by(alpha)]

    def satisfied_by(self, alpha: Sequence[int]) -> bool:
        return not self.falsified_axioms(alpha)


def assignments(n: int) -> Iterator[tuple[int, ...]]:
    """Every 0-1 assignment of length n in lexicographic order."""
    return itertools.product((0, 1), repeat=n)


def find_satisfying_assignment(system: System) -> Optional[tuple[int, ...]]:
    """Brute-force search of {0,1}^n for an assignment meeting every axiom.

    Args:
        system: System with at most MAX_BRUTE_FORCE_VARS variables

    Returns:
        The first satisfying assignment, or None if the system is unsatisfiable
    """
    if system.n > MAX_BRUTE_FORCE_VARS:
        raise InputError(f"brute force limited to {MAX_BRUTE_FORCE_VARS} variables, got {system.n}")
    for alpha in assignments(system.n):
        if system.satisfied_by(alpha):
            return alpha
    return None


def _content_lines(text: str) -> Iterator[tuple[int, list[str]]]:
    for line_no, raw in enumerate(text.splitlines(), 1):
        content = raw.split("#", 1)[0].strip()
        if content:
            yield line_no, content.split()


def parse_system(text: str, source: str = "<string>", boolean_axioms: bool = BOOLEAN_AXIOMS) -> System:
    """Parse the system format: a line holding n, then one axiom "a_1 ... a_n c" per line.

    Blank lines and '#' comments are skipped.

    Args:
        text: File contents
        source: Name used in diagnostics
        boolean_axioms: Whether implicit 0 <= x_i <= 1 axioms are available

    Returns:
        The parsed System
    """
    lines = _content_lines(text)
    header = next(lines, None)
    if header is None:
        raise ParseError("missing variable count", source)
    line_no, tokens = header
    if len(tokens) != 1 or not re.fullmatch(r"[0-9]+", tokens[0]) or int(tokens[0]) < 1:
        raise ParseError(f"first line must be a positive variable count, got {' '.join(tokens)!r}", source, line_no)
    n = int(tokens[0])

    axioms = tuple(parse_inequality(tokens, n, source, line_no) for line_no, tokens in lines)
    logger.debug("parsed %s: n=%d, %d axioms", source, n, len(axioms))
    return System(n=n, axioms=axioms, boolean_axioms=boolean_axioms)


def format_system(system: System) -> str:
    """Write a system back in the format parse_system reads."""
    return "\n".join([str(system.n), *(axiom.tokens() for axiom in system.axioms)]) + "\n"
