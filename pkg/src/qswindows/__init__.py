"""Exact wall-crossing combinatorics of quasi-symmetric representations."""

__version__ = "0.1.0"

from .rep import QSRep
from .root_data import RootDatum
from .windows import Context

__all__ = ["QSRep", "RootDatum", "Context", "__version__"]
