"""
Weighted intrinsic volumes and the morphometric energy.
"""

from .intrinsic_volumes import (
    MeasureSet,
    CornerSplit,
    EQUAL_THIRDS,
    weighted_volume,
    weighted_area,
    weighted_mean_curvature,
    weighted_gaussian_curvature,
    compute_measures,
)
from .energy import MorphometricCoefficients, morphometric_energy

__all__ = [
    "MeasureSet",
    "CornerSplit",
    "EQUAL_THIRDS",
    "weighted_volume",
    "weighted_area",
    "weighted_mean_curvature",
    "weighted_gaussian_curvature",
    "compute_measures",
    "MorphometricCoefficients",
    "morphometric_energy",
]
