"""
Closed-form sphere geometry: pairs, triples, solid angles and the scalar
distance derivatives used by the measures and gradients.
"""

from .ball import Ball
from .pairs import (
    PairGeometry,
    PairDerivatives,
    pair_geometry,
    pair_derivatives,
    derivatives_of,
    cap_area_fraction,
    lambda_ij,
)
from .triples import (
    TripleGeometry,
    triple_geometry,
    solid_angle,
    spherical_excess,
    tangent_at_corner,
    arc_angle_derivative,
)

__all__ = [
    "Ball",
    "PairGeometry",
    "PairDerivatives",
    "pair_geometry",
    "pair_derivatives",
    "derivatives_of",
    "cap_area_fraction",
    "lambda_ij",
    "TripleGeometry",
    "triple_geometry",
    "solid_angle",
    "spherical_excess",
    "tangent_at_corner",
    "arc_angle_derivative",
]
