"""
Exception hierarchy for ballmorph.

Geometry kernels raise the narrow ``GeometryError`` subclasses; the
complex, gradient and degeneracy layers raise ``DegenerateState`` when a
state sits on (or within tolerance of) a degeneracy manifold.
"""

from typing import Optional, Sequence, Tuple, Any


class BallMorphError(Exception):
    """Base class for all ballmorph errors."""


class GeometryError(BallMorphError):
    """Closed-form geometry could not be evaluated for the given balls."""


class DisjointOrNested(GeometryError):
    """Two spheres do not meet in a circle (disjoint, tangent or nested)."""


class NoTriplePoint(GeometryError):
    """Three spheres have no pair of common points."""


class DegenerateFrame(GeometryError):
    """Three unit vectors are coplanar within tolerance."""


class SignUndetermined(GeometryError):
    """The tangent orientation at a corner cannot be decided."""


class TangentialContact(GeometryError):
    """A circle touches a sphere tangentially."""


class OutOfRange(GeometryError):
    """A scalar argument lies outside its admissible interval."""


class DegenerateState(BallMorphError):
    """
    The state lies within tolerance of a general-position violation.

    Attributes:
        case_label: Event label such as ``C1`` or ``FLIP(2->3)``, if known
        involved: Ball indices taking part in the violation
        report: Optional attached ``DegeneracyReport``
    """

    def __init__(self, message: str,
                 case_label: Optional[str] = None,
                 involved: Sequence[int] = (),
                 report: Any = None):
        super().__init__(message)
        self.case_label = case_label
        self.involved: Tuple[int, ...] = tuple(involved)
        self.report = report


class UnrecognizedEvent(BallMorphError):
    """A combinatorial change matches no single-violation event."""


class CrossedDegeneracy(BallMorphError):
    """A finite-difference straddle crossed a combinatorial change."""


class TopologyChange(BallMorphError):
    """The alpha complex changed across a thickening grid."""


class ParseError(BallMorphError):
    """
    A ball file could not be parsed.

    Attributes:
        line_number: 1-based line of the offending input, or None
    """

    def __init__(self, message: str, line_number: Optional[int] = None):
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)
        self.line_number = line_number
