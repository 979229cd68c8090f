"""Two-party public-coin protocol substrate."""

from src.comm.bits import BitString, check_same_length
from src.comm.coins import CoinSource, CoinStream, FixedCoins, derive_seed
from src.comm.channel import (
    Channel,
    Party,
    ProtocolResult,
    Transcript,
    TranscriptEvent,
    bits_used,
)

__all__ = [
    "BitString",
    "check_same_length",
    "CoinSource",
    "CoinStream",
    "FixedCoins",
    "derive_seed",
    "Channel",
    "Party",
    "ProtocolResult",
    "Transcript",
    "TranscriptEvent",
    "bits_used",
]
