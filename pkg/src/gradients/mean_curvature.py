"""
Gradient of the weighted mean curvature

    M = 4 pi sum_i w_i r_i sigma_i - (pi / 2) sum_{i<j} (w_i + w_j) r_ij phi_ij sigma_ij

split into p (moving spherical patches), q (changing arc radius and
dihedral angle) and s (changing arc fractions).
"""

import math
import logging
from typing import Optional

import numpy as np

from .field import Accumulator, GradientField
from .fraction_derivatives import circle_fraction_coefficients, sphere_fraction_coefficients
from ..complex.alpha_complex import AlphaComplex
from ..complex.ball_set import BallSet
from ..geometry.pairs import derivatives_of
from ..utils.exceptions import DegenerateState

logger = logging.getLogger(__name__)


def _check_arc_radii(complex_: AlphaComplex, balls: BallSet) -> None:
    """Arc radii near zero make dr_ij/d(dist) unbounded."""
    scale = balls.mean_radius ** 2
    for (i, j), edge in complex_.fractions.edges.items():
        if edge.sigma == 0.0:
            continue
        pair = edge.pair
        if pair.r_ij ** 2 <= complex_.tolerance * scale:
            external = abs(pair.dist - (pair.r_i + pair.r_j))
            internal = abs(pair.dist - abs(pair.r_i - pair.r_j))
            label = "C1" if external <= internal else "N01"
            raise DegenerateState(f"Spheres {i} and {j} are nearly tangent",
                                  case_label=label, involved=(i, j))


def _attach_report(exc: DegenerateState, complex_: AlphaComplex, balls: BallSet) -> None:
    if exc.report is not None:
        return
    from ..degeneracy.detector import check_general_position

    reports = check_general_position(complex_, balls, max(complex_.tolerance, 1e-9))
    if not reports:
        return
    exc.report = reports[0]
    if exc.case_label is None:
        exc.case_label = reports[0].case_label


def mean_curvature_gradient(complex_: AlphaComplex,
                            balls: Optional[BallSet] = None) -> GradientField:
    """
    Analytic gradient of the weighted mean curvature.

    Args:
        complex_: Alpha complex with fractions
        balls: Ball set, defaults to the complex's

    Returns:
        GradientField with g = p + q + s

    Raises:
        DegenerateState: the state is within tolerance of a sphere
            tangency or of a corner appearing on a circle; the exception
            carries a degeneracy report
    """
    balls = balls if balls is not None else complex_.balls
    try:
        return _mean_curvature_gradient(complex_, balls)
    except DegenerateState as exc:
        _attach_report(exc, complex_, balls)
        logger.warning(f"Mean curvature gradient undefined: {exc} ({exc.case_label})")
        raise


def _mean_curvature_gradient(complex_: AlphaComplex, balls: BallSet) -> GradientField:
    _check_arc_radii(complex_, balls)
    n = balls.n
    w, r = balls.weights, balls.radii
    p_acc, q_acc, s_acc = Accumulator(n), Accumulator(n), Accumulator(n)

    for (i, j), c in sphere_fraction_coefficients(complex_, balls).items():
        term = 4.0 * math.pi * w[i] * r[i] * c
        p_acc.add(i, term)
        p_acc.sub(j, term)

    for (i, j), edge in complex_.fractions.edges.items():
        if edge.sigma == 0.0:
            continue
        pair = edge.pair
        weight = 0.5 * math.pi * (w[i] + w[j])
        deriv = derivatives_of(pair)
        q = -weight * edge.sigma * (pair.phi_ij * deriv.dr_ij_ddist
                                    + pair.r_ij * deriv.dphi_ij_ddist)
        q_acc.add(i, q * pair.u_ij)
        q_acc.sub(j, q * pair.u_ij)

        coefficients = circle_fraction_coefficients(edge, balls, complex_.tolerance)
        scale = -weight * pair.r_ij * pair.phi_ij
        for index, vector in coefficients.items():
            s_acc.add(index, scale * vector)

    p, q, s = p_acc.total(), q_acc.total(), s_acc.total()
    return GradientField(p + q + s, p=p, q=q, s=s, measure="mean")
