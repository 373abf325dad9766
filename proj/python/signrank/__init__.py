"""Sign-rank, VC dimension and stabbing-path analysis of sign matrices."""

from ._core import *  # noqa: F401,F403
from ._core import InputError, PreconditionError, SignMatrix, SizeLimitError  # noqa: F401

__version__ = "0.1.0"
