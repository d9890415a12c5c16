"""
Delaunay mosaic, alpha complex and Voronoi-clipped fractions of a ball set.
"""

from .ball_set import BallSet
from .power_diagram import PowerDiagram
from .triangulation import RegularTriangulation, build_regular_triangulation, orthosphere
from .fractions import (
    FreeArc,
    EdgeFractions,
    TriangleFractions,
    Fractions,
    compute_fractions,
)
from .alpha_complex import Simplex, AlphaComplex, build_alpha_complex

__all__ = [
    "BallSet",
    "PowerDiagram",
    "RegularTriangulation",
    "build_regular_triangulation",
    "orthosphere",
    "FreeArc",
    "EdgeFractions",
    "TriangleFractions",
    "Fractions",
    "compute_fractions",
    "Simplex",
    "AlphaComplex",
    "build_alpha_complex",
]
