"""
Gradient of the morphometric energy.
"""

import logging
from typing import Optional

import numpy as np

from .field import GradientField
from .mean_curvature import mean_curvature_gradient
from .volume_area import area_gradient, volume_gradient
from ..complex.alpha_complex import AlphaComplex
from ..complex.ball_set import BallSet
from ..measures.energy import MorphometricCoefficients

logger = logging.getLogger(__name__)


def energy_gradient(complex_: AlphaComplex, balls: Optional[BallSet] = None,
                    mu: MorphometricCoefficients = MorphometricCoefficients()) -> GradientField:
    """
    mu0 v + mu1 a + mu2 m.

    The Gaussian-curvature term has no gradient here. With equal weights
    the Gaussian curvature is a topological invariant and contributes
    nothing off the degeneracy manifolds, so mu3 is accepted only then.

    Raises:
        ValueError: mu3 != 0 with unequal weights
        DegenerateState: propagated from the mean curvature gradient
    """
    balls = balls if balls is not None else complex_.balls
    if mu.mu3 != 0.0 and not np.all(balls.weights == balls.weights[0]):
        raise ValueError("Gaussian-curvature gradient is only available for equal weights")

    total = np.zeros(3 * balls.n)
    if mu.mu0 != 0.0:
        total += mu.mu0 * volume_gradient(complex_, balls).g
    if mu.mu1 != 0.0:
        total += mu.mu1 * area_gradient(complex_, balls).g
    if mu.mu2 != 0.0:
        total += mu.mu2 * mean_curvature_gradient(complex_, balls).g
    logger.debug(f"Energy gradient norm {np.linalg.norm(total):.6g}")
    return GradientField(total, measure="energy")
