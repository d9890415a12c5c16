"""
Analytic gradients of the weighted volume, area and mean curvature with
respect to the ball centers.
"""

from .motion import (
    as_blocks,
    rigid_momentum,
    random_momentum,
    RetargetedMotion,
    retarget_motion,
)
from .field import GradientField
from .fraction_derivatives import (
    sigma_i_prime,
    sigma_ij_prime,
    pair_scalar_primes,
    sphere_fraction_coefficients,
    circle_fraction_coefficients,
)
from .volume_area import volume_gradient, area_gradient
from .mean_curvature import mean_curvature_gradient
from .energy import energy_gradient

__all__ = [
    "as_blocks",
    "rigid_momentum",
    "random_momentum",
    "RetargetedMotion",
    "retarget_motion",
    "GradientField",
    "sigma_i_prime",
    "sigma_ij_prime",
    "pair_scalar_primes",
    "sphere_fraction_coefficients",
    "circle_fraction_coefficients",
    "volume_gradient",
    "area_gradient",
    "mean_curvature_gradient",
    "energy_gradient",
]
