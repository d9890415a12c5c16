"""
Time derivatives of the sphere and circle fractions and of the pair
scalars r_ij and phi_ij along a momentum, together with their linear
coefficients in the velocities (used to assemble gradients).
"""

import math
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

import numpy as np

from .motion import as_blocks, retarget_motion
from ..complex.alpha_complex import AlphaComplex
from ..complex.ball_set import BallSet
from ..complex.fractions import EdgeFractions
from ..geometry.pairs import derivatives_of
from ..utils.exceptions import DegenerateState

logger = logging.getLogger(__name__)

TWO_PI = 2.0 * math.pi
Edge = Tuple[int, int]


@dataclass(frozen=True)
class CornerTerm:
    """
    One free-arc endpoint of S_ij.

    ``sign`` is +1 at the end of an arc and -1 at its start; ``ball`` is
    the index of the ball bounding the arc there.
    """
    point: np.ndarray
    ball: int
    sign: int


def _balls(complex_: AlphaComplex, balls: Optional[BallSet]) -> BallSet:
    return balls if balls is not None else complex_.balls


def _perpendicular(vector: np.ndarray, axis: np.ndarray) -> np.ndarray:
    perp = vector - float(vector @ axis) * axis
    return perp / np.linalg.norm(perp)


def corner_terms(edge: EdgeFractions) -> List[CornerTerm]:
    out = []
    for arc in edge.arcs:
        out.append(CornerTerm(edge.point_at(arc.start), arc.start_ball, -1))
        out.append(CornerTerm(edge.point_at(arc.end), arc.end_ball, +1))
    return out


def sphere_fraction_coefficients(complex_: AlphaComplex,
                                 balls: Optional[BallSet] = None) -> Dict[Edge, np.ndarray]:
    """
    Coefficients c[(i, j)] with sigma_i' = sum_j <c[(i, j)], t_i - t_j>.

    Both orientations of every intersecting pair are returned. The first
    part moves the cap boundary along the axis, the second tilts the
    plane and is carried by the straight sides of B_ij ∩ Vor_ij.
    """
    balls = _balls(complex_, balls)
    fractions = complex_.fractions
    out: Dict[Edge, np.ndarray] = {}
    for (i, j), edge in fractions.edges.items():
        pair = edge.pair
        u = pair.u_ij
        d = pair.dist
        tilt = np.zeros(3)
        for tri in fractions.triangles_at((i, j)):
            half_length = 0.5 * tri.segment_length()
            if half_length == 0.0:
                continue
            k = next(v for v in tri.vertices if v not in (i, j))
            tilt = tilt + half_length * _perpendicular(balls.centers[i] - balls.centers[k], u)
        D_i, D_j = pair.D, 1.0 - pair.D
        out[(i, j)] = (D_i * edge.sigma / (2.0 * pair.r_i)) * u + tilt / (TWO_PI * pair.r_i * d)
        out[(j, i)] = (D_j * edge.sigma / (2.0 * pair.r_j)) * (-u) + tilt / (TWO_PI * pair.r_j * d)
    return out


def sigma_i_prime(complex_: AlphaComplex, balls: Optional[BallSet],
                  momentum: np.ndarray) -> np.ndarray:
    """
    Rate of change of every sphere fraction sigma_i along a momentum.

    Returns:
        Array of n derivatives
    """
    balls = _balls(complex_, balls)
    t = as_blocks(momentum, balls.n)
    terms: List[List[float]] = [[] for _ in range(balls.n)]
    for (i, j), c in sphere_fraction_coefficients(complex_, balls).items():
        terms[i].append(float(c @ (t[i] - t[j])))
    return np.array([math.fsum(v) for v in terms])


def pair_scalar_primes(complex_: AlphaComplex, balls: Optional[BallSet],
                       momentum: np.ndarray) -> Dict[Edge, Tuple[float, float]]:
    """
    Rates of change (r_ij', phi_ij') of every boundary edge.

    Both are their distance derivatives times <u_ij, t_i - t_j>.
    """
    balls = _balls(complex_, balls)
    t = as_blocks(momentum, balls.n)
    out = {}
    for (i, j), edge in complex_.fractions.edges.items():
        if edge.sigma == 0.0:
            continue
        stretch = float(edge.pair.u_ij @ (t[i] - t[j]))
        deriv = derivatives_of(edge.pair)
        out[(i, j)] = (deriv.dr_ij_ddist * stretch, deriv.dphi_ij_ddist * stretch)
    return out


def _corner_denominator(edge: EdgeFractions, corner: CornerTerm, balls: BallSet,
                        tol: float) -> Tuple[np.ndarray, np.ndarray, float]:
    pair = edge.pair
    a = corner.point - balls.centers[corner.ball]
    c = (corner.point - pair.x_ij) / pair.r_ij
    tangent = np.cross(pair.u_ij, c)
    along = float(a @ tangent)
    if abs(along) <= tol * float(np.linalg.norm(a)):
        i, j = edge.vertices
        raise DegenerateState(
            f"Sphere {corner.ball} meets circle ({i},{j}) tangentially at a corner",
            involved=(i, j, corner.ball))
    return a, c, pair.r_ij * along


def sigma_ij_prime(complex_: AlphaComplex, balls: Optional[BallSet],
                   momentum: np.ndarray) -> Dict[Edge, float]:
    """
    Rate of change of every circle fraction sigma_ij along a momentum.

    Each corner P bounded by ball k moves along S_ij at angular speed
    (<a, T_ijk> - r_ij' <a, c>) / (r_ij <a, c_perp>) with a = P - x_k,
    c the radial unit vector at P and T_ijk the retargeted velocity.

    Raises:
        DegenerateState: a corner is being created or destroyed
    """
    balls = _balls(complex_, balls)
    tol = complex_.tolerance
    out = {}
    for (i, j), edge in complex_.fractions.edges.items():
        if not edge.arcs:
            out[(i, j)] = 0.0
            continue
        motion = retarget_motion(edge.pair, i, j, balls, momentum)
        rates = []
        for corner in corner_terms(edge):
            a, c, denom = _corner_denominator(edge, corner, balls, tol)
            theta_rate = (float(a @ motion.T(corner.ball))
                          - motion.radius_rate * float(a @ c)) / denom
            rates.append(corner.sign * theta_rate)
        out[(i, j)] = math.fsum(rates) / TWO_PI
    return out


def circle_fraction_coefficients(edge: EdgeFractions, balls: BallSet,
                                 tol: float) -> Dict[int, np.ndarray]:
    """
    Coefficients with sigma_ij' = sum_m <coef[m], t_m> for one edge.

    Returns:
        Mapping from ball index to its 3-vector coefficient; empty for a
        full or fully covered circle

    Raises:
        DegenerateState: a corner is being created or destroyed
    """
    if not edge.arcs:
        return {}
    i, j = edge.vertices
    pair = edge.pair
    u, d, D = pair.u_ij, pair.dist, pair.D
    rho = (pair.r_i ** 2 - pair.r_j ** 2) / d ** 2
    dr = derivatives_of(pair).dr_ij_ddist
    coef: Dict[int, List[np.ndarray]] = {}

    for corner in corner_terms(edge):
        a, c, denom = _corner_denominator(edge, corner, balls, tol)
        y = corner.point - pair.x_ij
        w = ((rho * float(a @ u) + dr * float(a @ c)) * u
             + np.cross(np.cross(y, a), u) / d)
        scale = -corner.sign / (TWO_PI * denom)
        for index, vector in ((i, D * a + w), (j, (1.0 - D) * a - w), (corner.ball, -a)):
            coef.setdefault(index, []).append(scale * vector)
    return {index: np.sum(vectors, axis=0) for index, vectors in coef.items()}
