"""In-process two-party channel with exact bit accounting."""

from dataclasses import dataclass, field
from enum import Enum
from typing import Generic, Optional, Sequence, TypeVar

from src.core.errors import InputError

T = TypeVar("T")


class Party(Enum):
    """The two players."""
    ALICE = "Alice"
    BOB = "Bob"

    @property
    def other(self) -> 'Party':
        """The opposite party."""
        return Party.BOB if self is Party.ALICE else Party.ALICE


@dataclass(frozen=True)
class TranscriptEvent:
    """One message: who sent it and how many bits it was charged."""
    round: int
    sender: Party
    bits: int


@dataclass
class Transcript:
    """Every message exchanged during a run, in round order."""

    events: list[TranscriptEvent] = field(default_factory=list)
    total_bits: int = 0

    def record(self, sender: Party, bit_count: int) -> TranscriptEvent:
        """Append a message.

        Args:
            sender: Party that sent the message
            bit_count: Bits charged for it

        Returns:
            The recorded event
        """
        if bit_count < 0:
            raise InputError(f"bit count must be non-negative, got {bit_count}")
        event = TranscriptEvent(round=len(self.events) + 1, sender=sender, bits=bit_count)
        self.events.append(event)
        self.total_bits += bit_count
        return event

    def bits_from(self, sender: Party) -> int:
        """Total bits sent by one party."""
        return sum(event.bits for event in self.events if event.sender is sender)


def bits_used(transcript: Transcript) -> int:
    """Total communication of a transcript.

    Args:
        transcript: Transcript to measure

    Returns:
        Sum of the bit counts of all events
    """
    return sum(event.bits for event in transcript.events)


class Channel:
    """Carries messages between Alice and Bob and charges them to a transcript.

    Nested protocols share one channel so their costs accumulate in the
    same transcript.
    """

    def __init__(self, transcript: Optional[Transcript] = None):
        self.transcript = transcript if transcript is not None else Transcript()

    def send(self, sender: Party, bits: Sequence[int]) -> tuple[int, ...]:
        """Send bits to the other party.

        Args:
            sender: Sending party
            bits: Message content

        Returns:
            The bits as delivered
        """
        message = tuple(bits)
        if message:
            self.transcript.record(sender, len(message))
        return message

    def send_bit(self, sender: Party, bit: int) -> bool:
        """Send a single bit and return it as delivered."""
        return bool(self.send(sender, (int(bool(bit)),))[0])

    @property
    def bits(self) -> int:
        """Bits charged so far."""
        return self.transcript.total_bits


@dataclass(frozen=True)
class ProtocolResult(Generic[T]):
    """Output of a protocol run with the transcript it produced."""
    output: T
    transcript: Transcript

    @property
    def bits(self) -> int:
        """Total bits in the transcript."""
        return self.transcript.total_bits
