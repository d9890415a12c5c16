"""
Three-sphere geometry: the point pair S_ijk, solid angles of normal
cones and corner quantities on intersection circles.
"""

import math
import logging
from dataclasses import dataclass

import numpy as np

from .ball import Ball
from .pairs import PairGeometry, pair_geometry
from ..utils.config import DEFAULT_TOLERANCE
from ..utils.exceptions import (
    NoTriplePoint, DegenerateFrame, SignUndetermined, TangentialContact,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class TripleGeometry:
    """
    The two common points of S_i, S_j and S_k.

    ``P_plus = x_ijk + r_ijk * normal`` where ``normal`` makes
    (u_ij, u_ik, normal) right-handed; ``P_minus`` is the mirror point.
    """
    P_plus: np.ndarray
    P_minus: np.ndarray
    r_ijk: float
    x_ijk: np.ndarray
    normal: np.ndarray
    u_ijk: np.ndarray
    phi_ijk: float
    u_ij_P: np.ndarray


def spherical_excess(a: np.ndarray, b: np.ndarray, c: np.ndarray) -> float:
    """Area of the spherical triangle (a, b, c); 0 for coplanar vectors."""
    det = float(np.dot(a, np.cross(b, c)))
    denom = 1.0 + float(a @ b) + float(b @ c) + float(c @ a)
    return 2.0 * math.atan2(abs(det), denom)


def solid_angle(n_i: np.ndarray, n_j: np.ndarray, n_k: np.ndarray,
                tol: float = DEFAULT_TOLERANCE) -> float:
    """
    Solid angle spanned by three unit vectors.

    Raises:
        DegenerateFrame: the vectors are coplanar within ``tol``
    """
    det = float(np.dot(n_i, np.cross(n_j, n_k)))
    if abs(det) < tol:
        raise DegenerateFrame(f"Unit vectors are coplanar (det={det:.3e})")
    return spherical_excess(n_i, n_j, n_k)


def tangent_at_corner(pair: PairGeometry, P: np.ndarray, x_k: np.ndarray,
                      tol: float = DEFAULT_TOLERANCE) -> np.ndarray:
    """
    Unit tangent of S_ij at P, oriented so that <x_k - P, u> > 0.

    Raises:
        SignUndetermined: x_k lies on the plane normal to the tangent
    """
    radial = pair.x_ij - P
    candidate = np.cross(radial, pair.u_ij) / np.linalg.norm(radial)
    to_k = np.asarray(x_k, dtype=float) - P
    s = float(to_k @ candidate)
    if abs(s) <= tol * max(1.0, float(np.linalg.norm(to_k))):
        raise SignUndetermined("Center x_k lies on the plane normal to the tangent at P")
    return candidate if s > 0 else -candidate


def arc_angle_derivative(pair: PairGeometry, P: np.ndarray, x_k: np.ndarray,
                         tol: float = DEFAULT_TOLERANCE) -> float:
    """
    d(alpha_P)/d(r_ij) for alpha_P = arcsin(g / (r_ij |x_k - P|)),
    g = <x_ij - P, x_k - P>, with g and |x_k - P| held fixed.

    Raises:
        TangentialContact: r_ij |x_k - P| is within tolerance of |g|
    """
    to_k = np.asarray(x_k, dtype=float) - P
    g = float((pair.x_ij - P) @ to_k)
    length = float(np.linalg.norm(to_k))
    scale = (pair.r_ij * length) ** 2
    disc = scale - g * g
    if disc <= tol * max(scale, 1.0):
        raise TangentialContact("Circle meets the sphere tangentially at the corner")
    return -g / (pair.r_ij * math.sqrt(disc))


def triple_geometry(ball_i: Ball, ball_j: Ball, ball_k: Ball,
                    tol: float = DEFAULT_TOLERANCE) -> TripleGeometry:
    """
    Intersect three spheres.

    Args:
        ball_i, ball_j, ball_k: The balls, in the order fixing the orientation
        tol: Relative tolerance on the squared half-chord

    Returns:
        TripleGeometry of S_ijk

    Raises:
        NoTriplePoint: the spheres have no pair of common points
    """
    x_i = ball_i.center
    a = ball_j.center - x_i
    b = ball_k.center - x_i
    cross = np.cross(a, b)
    cross_norm = float(np.linalg.norm(cross))
    scale = float(np.linalg.norm(a) * np.linalg.norm(b))
    if cross_norm <= tol * max(scale, 1e-300):
        raise NoTriplePoint("Centers are collinear")
    normal = cross / cross_norm

    r_i, r_j, r_k = ball_i.radius, ball_j.radius, ball_k.radius
    system = np.vstack([2.0 * a, 2.0 * b, normal])
    rhs = np.array([
        r_i * r_i - r_j * r_j + a @ a,
        r_i * r_i - r_k * r_k + b @ b,
        0.0,
    ])
    offset = np.linalg.solve(system, rhs)
    h2 = r_i * r_i - float(offset @ offset)
    mean_r = (r_i + r_j + r_k) / 3.0
    if h2 <= tol * mean_r * mean_r:
        raise NoTriplePoint(f"Spheres miss a common point (h^2={h2:.3e})")
    h = math.sqrt(h2)

    x_ijk = x_i + offset
    P_plus = x_ijk + h * normal
    P_minus = x_ijk - h * normal

    u_ij = -a / np.linalg.norm(a)
    u_ik = -b / np.linalg.norm(b)
    perp = u_ik - float(u_ik @ u_ij) * u_ij
    u_ijk = perp / np.linalg.norm(perp)

    normals = [(P_plus - ball.center) / ball.radius for ball in (ball_i, ball_j, ball_k)]
    phi_ijk = spherical_excess(*normals)

    pair = pair_geometry(ball_i, ball_j)
    u_ij_P = tangent_at_corner(pair, P_plus, ball_k.center, tol)

    return TripleGeometry(P_plus=P_plus, P_minus=P_minus, r_ijk=h, x_ijk=x_ijk,
                          normal=normal, u_ijk=u_ijk, phi_ijk=phi_ijk, u_ij_P=u_ij_P)
