"""
ballmorph: weighted intrinsic volumes of unions of balls

This package computes the weighted volume, area, mean and Gaussian
curvature of a union of balls from its alpha complex, the analytic
gradients of the first three, and the morphometric energy built from
them. It also detects and classifies the degenerate states where those
gradients may fail to exist.
"""

from .complex.ball_set import BallSet
from .complex.alpha_complex import AlphaComplex, build_alpha_complex
from .measures.intrinsic_volumes import MeasureSet, compute_measures
from .measures.energy import MorphometricCoefficients, morphometric_energy
from .gradients.volume_area import volume_gradient, area_gradient
from .gradients.mean_curvature import mean_curvature_gradient
from .gradients.energy import energy_gradient
from .degeneracy.detector import check_general_position
from .degeneracy.classifier import classify_event

__version__ = "1.0.0"
__author__ = "ballmorph Team"

__all__ = [
    "BallSet",
    "AlphaComplex",
    "build_alpha_complex",
    "MeasureSet",
    "compute_measures",
    "MorphometricCoefficients",
    "morphometric_energy",
    "volume_gradient",
    "area_gradient",
    "mean_curvature_gradient",
    "energy_gradient",
    "check_general_position",
    "classify_event",
]
