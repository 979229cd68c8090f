"""Linear inequalities a.x <= c over integer coefficients."""

import re
from dataclasses import dataclass
from typing import Optional, Sequence

from src.core.errors import InputError, ParseError
from src.threshold.function import ThresholdFunction

INTEGER = re.compile(r"[+-]?[0-9]+")


@dataclass(frozen=True)
class LinearInequality:
    """a_1 x_1 + ... + a_n x_n <= c.

    Always stored in <=-form; d.x >= e is kept as (-d).x <= -e.
    """
    coefficients: tuple[int, ...]
    bound: int

    @classmethod
    def at_least(cls, coefficients: Sequence[int], bound: int) -> 'LinearInequality':
        """Normalize d.x >= e into <=-form."""
        return cls(tuple(-a for a in coefficients), -bound)

    @property
    def n(self) -> int:
        return len(self.coefficients)

    def add(self, other: 'LinearInequality') -> 'LinearInequality':
        """Componentwise sum of both sides."""
        if other.n != self.n:
            raise InputError(f"cannot add inequalities over {self.n} and {other.n} variables")
        coefficients = tuple(a + b for a, b in zip(self.coefficients, other.coefficients))
        return LinearInequality(coefficients, self.bound + other.bound)

    def scale(self, d: int) -> 'LinearInequality':
        """Multiply by a nonzero integer.

        A negative d reverses the direction (d.a.x >= d.c) and the result
        is brought back into <=-form by negating both sides.
        """
        if d == 0:
            raise InputError("scalar must be nonzero")
        if d > 0:
            return LinearInequality(tuple(d * a for a in self.coefficients), d * self.bound)
        return LinearInequality.at_least(tuple(d * a for a in self.coefficients), d * self.bound)

    def divisible_by(self, c: int) -> bool:
        return c != 0 and all(a % c == 0 for a in self.coefficients)

    def divide(self, c: int) -> 'LinearInequality':
        """Rounded division: a/c . x <= floor(bound / c).

        Args:
            c: Divisor, at least 2, dividing every coefficient

        Returns:
            The divided inequality
        """
        if c < 2:
            raise InputError(f"divisor must be at least 2, got {c}")
        if not self.divisible_by(c):
            raise InputError(f"{c} does not divide every coefficient of {self}")
        return LinearInequality(tuple(a // c for a in self.coefficients), self.bound // c)

    def lhs(self, alpha: Sequence[int]) -> int:
        if len(alpha) != self.n:
            raise InputError(f"assignment has length {len(alpha)}, expected {self.n}")
        return sum(a * bit for a, bit in zip(self.coefficients, alpha))

    def satisfied_by(self, alpha: Sequence[int]) -> bool:
        return self.lhs(alpha) <= self.bound

    def is_contradiction(self) -> bool:
        """True iff no assignment at all satisfies it: 0.x <= c with c < 0."""
        return all(a == 0 for a in self.coefficients) and self.bound < 0

    def to_threshold(self) -> ThresholdFunction:
        """The threshold function that is 1 exactly where this inequality holds."""
        return ThresholdFunction(coefficients=self.coefficients, bound=self.bound)

    def tokens(self) -> str:
        """File form: "a_1 ... a_n c"."""
        return " ".join(str(v) for v in (*self.coefficients, self.bound))

    def __str__(self) -> str:
        terms = [f"{a:+d}*x{i}" for i, a in enumerate(self.coefficients, 1) if a != 0]
        return f"{' '.join(terms) if terms else '0'} <= {self.bound}"


def parse_inequality(tokens: Sequence[str], n: int, source: str = "<string>",
                     line_no: Optional[int] = None) -> LinearInequality:
    """Read n+1 decimal integers "a_1 ... a_n c" as a.x <= c.

    Args:
        tokens: Whitespace-split tokens
        n: Expected number of variables
        source: Name used in diagnostics
        line_no: Line number used in diagnostics

    Returns:
        The parsed inequality
    """
    if len(tokens) != n + 1:
        raise ParseError(f"expected {n + 1} integers, got {len(tokens)}", source, line_no)
    values = []
    for token in tokens:
        if not INTEGER.fullmatch(token):
            raise ParseError(f"{token!r} is not an integer", source, line_no)
        values.append(int(token))
    return LinearInequality(tuple(values[:-1]), values[-1])
