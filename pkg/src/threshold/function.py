"""Degree-1 threshold functions with arbitrary-precision coefficients."""

from dataclasses import dataclass
from typing import Optional, Sequence

from src.comm.bits import BitString
from src.core.errors import InputError


@dataclass(frozen=True)
class ThresholdFunction:
    """f(x) = 1 iff a_1 x_1 + ... + a_n x_n <= b."""
    coefficients: tuple[int, ...]
    bound: int

    def __post_init__(self):
        if len(self.coefficients) < 1:
            raise InputError("a threshold function needs at least one variable")

    @property
    def n(self) -> int:
        """Number of variables."""
        return len(self.coefficients)

    def partial_sum(self, assignment: dict[int, int]) -> int:
        """Sum a_i * alpha_i over the assigned (1-based) variables."""
        return sum(self.coefficients[i - 1] * bit for i, bit in assignment.items())

    def __str__(self) -> str:
        terms = " ".join(f"{a:+d}*x{i}" for i, a in enumerate(self.coefficients, 1))
        return f"{terms} <= {self.bound}"


def _check_assignment(alpha: Sequence[int], n: int) -> None:
    if len(alpha) != n:
        raise InputError(f"assignment has length {len(alpha)}, expected {n}")
    if any(bit not in (0, 1) for bit in alpha):
        raise InputError(f"assignment must be 0-1, got {tuple(alpha)!r}")


def eval_threshold(f: ThresholdFunction, alpha: Sequence[int]) -> int:
    """Evaluate f exactly on a 0-1 assignment.

    Args:
        f: Threshold function
        alpha: Assignment of length f.n

    Returns:
        1 if the inequality holds, else 0
    """
    _check_assignment(alpha, f.n)
    total = sum(a * bit for a, bit in zip(f.coefficients, alpha))
    return 1 if total <= f.bound else 0


def value_range(coefficients: Sequence[int]) -> tuple[int, int]:
    """Smallest and largest value of sum a_i x_i over x in {0,1}^n."""
    lo = sum(a for a in coefficients if a < 0)
    hi = sum(a for a in coefficients if a > 0)
    return lo, hi


def comparison_range(f: ThresholdFunction) -> tuple[int, int]:
    """Common range of both sides of the comparison x_1 > b - x_2.

    Covers every partial sum over a subset of the variables (Alice's side)
    and every b minus such a partial sum (Bob's side).
    """
    lo, hi = value_range(f.coefficients)
    return min(lo, f.bound - hi), max(hi, f.bound - lo)


def width_of(lo: int, hi: int) -> int:
    """Bits needed to encode every offset v - lo for v in [lo, hi]."""
    return max(1, (hi - lo).bit_length())


def bit_width(f: ThresholdFunction) -> int:
    """Input length m of the GT instance that decides f.

    Args:
        f: Threshold function

    Returns:
        Width in bits of the offset encoding of comparison_range(f)
    """
    return width_of(*comparison_range(f))


def encode_signed(v: int, range_lo: int, range_hi: int, width: Optional[int] = None) -> BitString:
    """Order-preserving fixed-width encoding of a signed integer.

    Args:
        v: Value in [range_lo, range_hi]
        range_lo: Smallest encodable value (maps to all zeros)
        range_hi: Largest encodable value
        width: Output width; defaults to width_of(range_lo, range_hi)

    Returns:
        Big-endian encoding of v - range_lo
    """
    if range_lo > range_hi:
        raise InputError(f"empty range [{range_lo}, {range_hi}]")
    if not range_lo <= v <= range_hi:
        raise InputError(f"{v} outside [{range_lo}, {range_hi}]")
    needed = width_of(range_lo, range_hi)
    if width is None:
        width = needed
    elif width < needed:
        raise InputError(f"width {width} too small for range [{range_lo}, {range_hi}]")
    return BitString.from_int(v - range_lo, width)
