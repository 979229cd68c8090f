"""Public random coins shared by both parties.

A CoinStream wraps a numpy Generator over the counter-based Philox bit
generator. Two streams with the same seed and the same draw requests
produce the same bits on every platform.
"""

from typing import Protocol, Sequence

import numpy as np

from src.core.errors import InputError

SEED_MASK = (1 << 64) - 1


class CoinSource(Protocol):
    """Anything protocols can draw public random bits from."""

    def draw_bits(self, count: int) -> tuple[int, ...]:
        ...


def derive_seed(seed: int, index: int) -> int:
    """Mix an index (e.g. a trial number) into a seed.

    Args:
        seed: Base 64-bit seed
        index: Non-negative index

    Returns:
        A new 64-bit seed
    """
    if index < 0:
        raise InputError(f"index must be non-negative, got {index}")
    state = np.random.SeedSequence([seed & SEED_MASK, index]).generate_state(1, dtype=np.uint64)
    return int(state[0])


class CoinStream:
    """Deterministic stream of public coin flips."""

    def __init__(self, seed: int):
        """Initialize the stream.

        Args:
            seed: 64-bit unsigned seed
        """
        if not 0 <= seed <= SEED_MASK:
            raise InputError(f"seed must be a 64-bit unsigned integer, got {seed}")
        self.seed = seed
        self.position = 0
        self._rng = np.random.Generator(np.random.Philox(seed))

    def draw_bits(self, count: int) -> tuple[int, ...]:
        """Draw the next `count` bits.

        Args:
            count: Number of bits, at least 1

        Returns:
            The drawn bits
        """
        if count < 1:
            raise InputError(f"count must be positive, got {count}")
        self.position += count
        return tuple(int(bit) for bit in self._rng.integers(0, 2, size=count))

    def draw_int(self, bound: int) -> int:
        """Draw an integer uniformly from [0, bound).

        Bounds past the int64 range are drawn from raw bytes with rejection.
        """
        if bound < 1:
            raise InputError(f"bound must be positive, got {bound}")
        if bound <= np.iinfo(np.int64).max:
            return int(self._rng.integers(bound))
        width = (bound - 1).bit_length()
        while True:
            value = int.from_bytes(self._rng.bytes((width + 7) // 8), "big") >> (-width % 8)
            if value < bound:
                return value

    def __repr__(self) -> str:
        return f"CoinStream(seed={self.seed}, position={self.position})"


class FixedCoins:
    """Replays an explicit coin sequence; used to enumerate coin spaces exactly."""

    def __init__(self, bits: Sequence[int]):
        self._bits = tuple(bits)
        self.position = 0

    def draw_bits(self, count: int) -> tuple[int, ...]:
        """Draw the next `count` scripted bits."""
        if count < 1:
            raise InputError(f"count must be positive, got {count}")
        end = self.position + count
        if end > len(self._bits):
            raise InputError(f"scripted coins exhausted after {len(self._bits)} bits")
        bits = self._bits[self.position:end]
        self.position = end
        return bits

    @property
    def remaining(self) -> int:
        """Number of scripted bits not yet drawn."""
        return len(self._bits) - self.position
