"""Fixed-width bit strings used as protocol inputs."""

from dataclasses import dataclass

from src.core.errors import InputError


@dataclass(frozen=True)
class BitString:
    """An ordered sequence of bits; index 1 is the most significant bit."""

    bits: tuple[int, ...]

    def __post_init__(self):
        """Validate length and bit values."""
        if len(self.bits) < 1:
            raise InputError("BitString needs at least one bit")
        if any(bit not in (0, 1) for bit in self.bits):
            raise InputError(f"BitString bits must be 0 or 1, got {self.bits!r}")

    @classmethod
    def from_str(cls, text: str) -> 'BitString':
        """Parse a string such as "1010".

        Args:
            text: Characters '0' and '1' only

        Returns:
            The corresponding BitString
        """
        text = text.strip()
        if not text or set(text) - {"0", "1"}:
            raise InputError(f"not a bit string: {text!r}")
        return cls(tuple(int(ch) for ch in text))

    @classmethod
    def from_int(cls, value: int, width: int) -> 'BitString':
        """Encode a non-negative integer big-endian in exactly `width` bits.

        Args:
            value: Integer in [0, 2^width)
            width: Number of bits, at least 1

        Returns:
            The encoding as a BitString
        """
        if width < 1:
            raise InputError(f"width must be positive, got {width}")
        if value < 0 or value.bit_length() > width:
            raise InputError(f"{value} does not fit in {width} bits")
        return cls(tuple((value >> (width - 1 - i)) & 1 for i in range(width)))

    @property
    def n(self) -> int:
        """Number of bits."""
        return len(self.bits)

    @property
    def value(self) -> int:
        """Value as an unsigned integer."""
        result = 0
        for bit in self.bits:
            result = (result << 1) | bit
        return result

    def bit(self, index: int) -> int:
        """Get the bit at a 1-based index."""
        if not 1 <= index <= self.n:
            raise InputError(f"bit index {index} outside [1, {self.n}]")
        return self.bits[index - 1]

    def segment(self, lo: int, hi: int) -> tuple[int, ...]:
        """Get bits lo..hi (1-based, inclusive); empty when hi < lo."""
        if hi < lo:
            return ()
        return self.bits[lo - 1:hi]

    def __len__(self) -> int:
        return self.n

    def __str__(self) -> str:
        return "".join(str(bit) for bit in self.bits)


def check_same_length(x: BitString, y: BitString) -> int:
    """Check that both inputs have equal length.

    Args:
        x: Alice's input
        y: Bob's input

    Returns:
        The common length n
    """
    if x.n != y.n:
        raise InputError(f"input lengths differ: {x.n} != {y.n}")
    return x.n
