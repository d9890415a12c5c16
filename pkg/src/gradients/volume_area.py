"""
Gradients of the weighted volume and the weighted area.
"""

import math
import logging
from typing import Optional

import numpy as np

from .field import Accumulator, GradientField
from .fraction_derivatives import sphere_fraction_coefficients
from ..complex.alpha_complex import AlphaComplex
from ..complex.ball_set import BallSet

logger = logging.getLogger(__name__)


def volume_gradient(complex_: AlphaComplex, balls: Optional[BallSet] = None) -> GradientField:
    """
    Gradient of (4 pi / 3) sum_i w_i nu_i r_i^3.

    Every disk B_ij ∩ Vor_ij pushes x_i along u_ij with force
    pi r_ij^2 nu_ij [w_i D + w_j (1 - D)]. With unequal weights the disk
    also tilts, which adds (w_i - w_j) / dist times its first moment
    about x_ij.
    """
    balls = balls if balls is not None else complex_.balls
    w = balls.weights
    acc = Accumulator(balls.n)
    for (i, j), edge in complex_.fractions.edges.items():
        if edge.nu == 0.0:
            continue
        pair = edge.pair
        area = math.pi * pair.r_ij ** 2 * edge.nu
        force = area * (w[i] * pair.D + w[j] * (1.0 - pair.D)) * pair.u_ij
        if w[i] != w[j]:
            force = force + area * (w[i] - w[j]) / pair.dist * edge.centroid_offset
        acc.add(i, force)
        acc.sub(j, force)
    return GradientField(acc.total(), measure="volume")


def area_gradient(complex_: AlphaComplex, balls: Optional[BallSet] = None) -> GradientField:
    """
    Gradient of 4 pi sum_i w_i sigma_i r_i^2.

    Returns:
        GradientField of length 3n
    """
    balls = balls if balls is not None else complex_.balls
    w, r = balls.weights, balls.radii
    acc = Accumulator(balls.n)
    for (i, j), c in sphere_fraction_coefficients(complex_, balls).items():
        term = 4.0 * math.pi * w[i] * r[i] ** 2 * c
        acc.add(i, term)
        acc.sub(j, term)
    return GradientField(acc.total(), measure="area")
