"""Exception hierarchy shared by every toolkit package."""

from typing import TYPE_CHECKING, Optional

if TYPE_CHECKING:
    from src.proofs.verifier import Violation


class ToolkitError(Exception):
    """Base class for all toolkit errors."""


class InputError(ToolkitError, ValueError):
    """A precondition on an operation's inputs was violated."""


class ParseError(ToolkitError):
    """A system, proof, tree, partition or assignment text could not be parsed."""

    def __init__(self, message: str, source: str = "<string>", line_no: Optional[int] = None):
        self.message = message
        self.source = source
        self.line_no = line_no
        location = source if line_no is None else f"{source}:{line_no}"
        super().__init__(f"{location}: {message}")


class ProofError(ToolkitError):
    """An operation that needs a verified proof was handed an invalid one."""

    def __init__(self, violation: 'Violation'):
        self.violation = violation
        super().__init__(str(violation))


class ProtocolError(ToolkitError):
    """A protocol run broke one of its hard guarantees."""
