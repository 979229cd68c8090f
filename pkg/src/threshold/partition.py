"""Variable partitions between Alice and Bob."""

import re
from dataclasses import dataclass
from typing import Sequence

from src.core.errors import InputError, ParseError


@dataclass(frozen=True)
class Partition:
    """Disjoint, covering split of variables 1..n; either side may be empty."""
    n: int
    part_a: frozenset[int]
    part_b: frozenset[int]

    def __post_init__(self):
        """Validate disjointness and coverage."""
        if self.n < 1:
            raise InputError(f"n must be positive, got {self.n}")
        overlap = self.part_a & self.part_b
        if overlap:
            raise InputError(f"variables on both sides: {sorted(overlap)}")
        missing = set(range(1, self.n + 1)) - self.part_a - self.part_b
        if missing:
            raise InputError(f"variables on neither side: {sorted(missing)}")
        extra = (self.part_a | self.part_b) - set(range(1, self.n + 1))
        if extra:
            raise InputError(f"variables outside 1..{self.n}: {sorted(extra)}")

    @classmethod
    def of(cls, n: int, part_a: Sequence[int]) -> 'Partition':
        """Alice gets part_a, Bob gets the rest."""
        alice = frozenset(part_a)
        return cls(n=n, part_a=alice, part_b=frozenset(range(1, n + 1)) - alice)

    def project(self, alpha: Sequence[int]) -> tuple[dict[int, int], dict[int, int]]:
        """Split a full assignment into Alice's and Bob's projections.

        Args:
            alpha: Assignment of length n (alpha[0] is x_1)

        Returns:
            Tuple of (alice_projection, bob_projection), 1-based index -> bit
        """
        if len(alpha) != self.n:
            raise InputError(f"assignment has length {len(alpha)}, expected {self.n}")
        alice = {i: alpha[i - 1] for i in sorted(self.part_a)}
        bob = {i: alpha[i - 1] for i in sorted(self.part_b)}
        return alice, bob

    def check_projection(self, alpha_a: dict[int, int], alpha_b: dict[int, int]) -> None:
        """Raise InputError unless the projections assign exactly each side."""
        if set(alpha_a) != self.part_a:
            raise InputError(f"Alice's projection covers {sorted(alpha_a)}, expected {sorted(self.part_a)}")
        if set(alpha_b) != self.part_b:
            raise InputError(f"Bob's projection covers {sorted(alpha_b)}, expected {sorted(self.part_b)}")
        for bit in list(alpha_a.values()) + list(alpha_b.values()):
            if bit not in (0, 1):
                raise InputError(f"projected values must be 0-1, got {bit!r}")

    def __str__(self) -> str:
        return ";".join(",".join(str(i) for i in sorted(side)) for side in (self.part_a, self.part_b))


def parse_partition(text: str, n: int) -> Partition:
    """Parse "1,3;2,4": Alice's indices, a semicolon, Bob's indices.

    Args:
        text: Partition string; a side may be empty ("1,2;")
        n: Number of variables

    Returns:
        The parsed Partition
    """
    sides = text.strip().split(";")
    if len(sides) != 2:
        raise ParseError(f"partition {text!r} must have exactly two ';'-separated sides", source="--partition")

    parsed: list[list[int]] = []
    for side in sides:
        indices = []
        for token in filter(None, (tok.strip() for tok in side.split(","))):
            if not re.fullmatch(r"[0-9]+", token):
                raise ParseError(f"partition index {token!r} is not a positive integer", source="--partition")
            indices.append(int(token))
        if len(indices) != len(set(indices)):
            raise ParseError(f"repeated index in side {side!r}", source="--partition")
        parsed.append(indices)

    try:
        return Partition(n=n, part_a=frozenset(parsed[0]), part_b=frozenset(parsed[1]))
    except InputError as exc:
        raise ParseError(str(exc), source="--partition") from exc


def parse_assignment(text: str, n: int) -> tuple[int, ...]:
    """Parse an assignment string such as "0110" of length n."""
    text = text.strip()
    if len(text) != n or set(text) - {"0", "1"}:
        raise ParseError(f"assignment {text!r} must be {n} characters of 0/1", source="--alpha")
    return tuple(int(ch) for ch in text)
