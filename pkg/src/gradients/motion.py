"""
States, momenta and the motion of an intersection circle.

A momentum assigns a velocity to every center. ``retarget_motion``
subtracts the rigid motion that keeps the circle center x_ij and the
axis u_ij of a pair still, which leaves the part of the momentum that
actually moves the corners of S_ij.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict

import numpy as np

from ..complex.ball_set import BallSet
from ..geometry.pairs import PairGeometry, derivatives_of

logger = logging.getLogger(__name__)


def as_blocks(vector: np.ndarray, n: int) -> np.ndarray:
    """View a 3n state or momentum as an (n, 3) array."""
    vector = np.asarray(vector, dtype=float)
    if vector.size != 3 * n:
        raise ValueError(f"Expected a vector of length {3 * n}, got {vector.size}")
    return vector.reshape(n, 3)


def rigid_momentum(balls: BallSet, angular=(0.0, 0.0, 0.0),
                   linear=(0.0, 0.0, 0.0)) -> np.ndarray:
    """
    Infinitesimal rigid motion t_i = omega x x_i + b as a 3n momentum.

    Args:
        balls: The ball set
        angular: Angular velocity omega
        linear: Translational velocity b
    """
    omega = np.asarray(angular, dtype=float)
    b = np.asarray(linear, dtype=float)
    return (np.cross(omega, balls.centers) + b).reshape(-1)


def random_momentum(n: int, rng: np.random.Generator) -> np.ndarray:
    """Unit-norm momentum with Gaussian direction."""
    t = rng.standard_normal(3 * n)
    return t / np.linalg.norm(t)


@dataclass
class RetargetedMotion:
    """
    A momentum seen from the frame that fixes S_ij's center and plane.

    Attributes:
        i, j: The pair
        D: d(xi_i)/d(dist) of the pair
        relative: V_ij[k] = t_k - t_i for every ball k (V_ij[i] = 0)
        stretch: Rate of change of the center distance
        center_velocity: Velocity of x_ij
        omega: Angular velocity turning u_ij (perpendicular to u_ij)
        radius_rate: Rate of change of r_ij
        retargeted: T_ijk, velocity of x_k relative to the circle frame
    """
    i: int
    j: int
    D: float
    relative: np.ndarray
    stretch: float
    center_velocity: np.ndarray
    omega: np.ndarray
    radius_rate: float
    retargeted: np.ndarray = field(repr=False)

    @property
    def V_ij(self) -> np.ndarray:
        return self.relative[self.j]

    def T(self, k: int) -> np.ndarray:
        return self.retargeted[k]

    def frame_velocity(self, point: np.ndarray, x_ij: np.ndarray) -> np.ndarray:
        """Velocity of a point carried rigidly with the circle frame."""
        return self.center_velocity + np.cross(self.omega, np.asarray(point) - x_ij)


def retarget_motion(pair: PairGeometry, i: int, j: int, balls: BallSet,
                    momentum: np.ndarray) -> RetargetedMotion:
    """
    Split a momentum into the motion of the circle S_ij and the rest.

    Args:
        pair: Geometry of the pair, oriented from x_j toward x_i
        i, j: Indices of the pair in ``balls``
        balls: The ball set
        momentum: 3n velocities

    Returns:
        RetargetedMotion for the pair
    """
    t = as_blocks(momentum, balls.n)
    u = pair.u_ij
    d = pair.dist
    D = pair.D
    rho = (pair.r_i ** 2 - pair.r_j ** 2) / d ** 2
    delta = t[i] - t[j]
    stretch = float(u @ delta)

    center_velocity = D * t[i] + (1.0 - D) * t[j] + rho * stretch * u
    omega = np.cross(u, delta) / d
    radius_rate = derivatives_of(pair).dr_ij_ddist * stretch

    offsets = balls.centers - pair.x_ij
    retargeted = t - center_velocity - np.cross(omega, offsets)
    return RetargetedMotion(
        i=i, j=j, D=D,
        relative=t - t[i],
        stretch=stretch,
        center_velocity=center_velocity,
        omega=omega,
        radius_rate=radius_rate,
        retargeted=retargeted,
    )
