from .settings import *
from .errors import ToolkitError, InputError, ParseError, ProofError, ProtocolError
