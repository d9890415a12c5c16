"""
Configuration, exceptions and small numeric helpers shared across ballmorph.
"""

from .config import Settings, get_settings
from .exceptions import (
    BallMorphError,
    GeometryError,
    DisjointOrNested,
    NoTriplePoint,
    DegenerateFrame,
    SignUndetermined,
    TangentialContact,
    OutOfRange,
    DegenerateState,
    UnrecognizedEvent,
    CrossedDegeneracy,
    TopologyChange,
    ParseError,
)

__all__ = [
    "Settings",
    "get_settings",
    "BallMorphError",
    "GeometryError",
    "DisjointOrNested",
    "NoTriplePoint",
    "DegenerateFrame",
    "SignUndetermined",
    "TangentialContact",
    "OutOfRange",
    "DegenerateState",
    "UnrecognizedEvent",
    "CrossedDegeneracy",
    "TopologyChange",
    "ParseError",
]
