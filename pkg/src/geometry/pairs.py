"""
Two-sphere geometry: intersection circle, normal angle and the scalar
derivatives of both with respect to the center distance.
"""

import math
import logging
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .ball import Ball
from ..utils.exceptions import DisjointOrNested, OutOfRange

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class PairGeometry:
    """
    Intersection of spheres S_i and S_j.

    ``u_ij`` points from x_j to x_i, ``x_ij`` is the center of the circle
    S_ij, ``xi_i``/``xi_j`` are the signed distances of the radical plane
    from x_i/x_j measured toward the other center.
    """
    dist: float
    xi_i: float
    xi_j: float
    r_ij: float
    x_ij: np.ndarray
    phi_ij: float
    u_ij: np.ndarray
    r_i: float
    r_j: float

    @property
    def D(self) -> float:
        """d(xi_i)/d(dist) = (1 - (r_i^2 - r_j^2)/dist^2) / 2."""
        return 0.5 * (1.0 - (self.r_i ** 2 - self.r_j ** 2) / self.dist ** 2)

    @property
    def heron_area(self) -> float:
        """Area of the triangle (x_i, x_j, P) for any P on S_ij."""
        return 0.5 * self.r_ij * self.dist

    def flipped(self) -> "PairGeometry":
        """The same circle seen from x_j."""
        return PairGeometry(
            dist=self.dist, xi_i=self.xi_j, xi_j=self.xi_i, r_ij=self.r_ij,
            x_ij=self.x_ij, phi_ij=self.phi_ij, u_ij=-self.u_ij,
            r_i=self.r_j, r_j=self.r_i,
        )


class PairDerivatives(NamedTuple):
    """Distance derivatives of the pair quantities."""
    dr_ij_ddist: float
    dphi_ij_ddist: float
    dsigma_i_ddist_unit: float
    D: float


def _heron_product(r_i: float, r_j: float, d: float) -> float:
    return (r_i + r_j + d) * (-r_i + r_j + d) * (r_i - r_j + d) * (r_i + r_j - d)


def pair_geometry(ball_i: Ball, ball_j: Ball) -> PairGeometry:
    """
    Compute the intersection circle of two spheres.

    Args:
        ball_i: First ball
        ball_j: Second ball

    Returns:
        PairGeometry oriented from ball_j toward ball_i

    Raises:
        DisjointOrNested: spheres are disjoint, tangent or nested
    """
    r_i, r_j = ball_i.radius, ball_j.radius
    diff = ball_i.center - ball_j.center
    d = float(np.linalg.norm(diff))

    if not (abs(r_i - r_j) < d < r_i + r_j):
        raise DisjointOrNested(
            f"Spheres (r={r_i}, r={r_j}) at distance {d} do not meet in a circle")
    product = _heron_product(r_i, r_j, d)
    if product <= 0.0:
        raise DisjointOrNested(f"Intersection circle vanishes at distance {d}")

    area = 0.25 * math.sqrt(product)
    r_ij = 2.0 * area / d
    xi_i = (d * d + r_i * r_i - r_j * r_j) / (2.0 * d)
    xi_j = d - xi_i
    u_ij = diff / d
    x_ij = ball_i.center - xi_i * u_ij
    cos_phi = (r_i * r_i + r_j * r_j - d * d) / (2.0 * r_i * r_j)
    phi_ij = math.acos(min(1.0, max(-1.0, cos_phi)))

    return PairGeometry(dist=d, xi_i=xi_i, xi_j=xi_j, r_ij=r_ij, x_ij=x_ij,
                        phi_ij=phi_ij, u_ij=u_ij, r_i=r_i, r_j=r_j)


def pair_derivatives(ball_i: Ball, ball_j: Ball) -> PairDerivatives:
    """
    Derivatives of r_ij, phi_ij and the cap fraction of S_i with respect
    to the distance between the centers.

    Raises:
        DisjointOrNested: as for ``pair_geometry``
    """
    pair = pair_geometry(ball_i, ball_j)
    return derivatives_of(pair)


def derivatives_of(pair: PairGeometry) -> PairDerivatives:
    """Same as ``pair_derivatives`` for an already computed pair."""
    D = pair.D
    dr = -pair.xi_i * D / pair.r_ij
    # dist / (r_i r_j sin(phi)) with sin(phi) = dist r_ij / (r_i r_j)
    dphi = 1.0 / pair.r_ij
    dsigma = D / (2.0 * pair.r_i)
    return PairDerivatives(dr, dphi, dsigma, D)


def cap_area_fraction(r_i: float, xi_i: float) -> float:
    """
    Fraction of S_i on the far side of a plane at signed distance xi_i.

    Raises:
        OutOfRange: |xi_i| > r_i
    """
    if abs(xi_i) > r_i:
        raise OutOfRange(f"|xi|={abs(xi_i)} exceeds radius {r_i}")
    return (r_i + xi_i) / (2.0 * r_i)


def lambda_ij(pair: PairGeometry, r_i: float, r_j: float) -> float:
    """Combined projection length of the two unit normals onto the center line."""
    return pair.xi_i / r_i + pair.xi_j / r_j
