"""
Power-distance queries against a ball set (the weighted Voronoi diagram
is never materialized).
"""

import numpy as np

from .ball_set import BallSet


class PowerDiagram:
    """Answers Voronoi-domain membership by comparing power distances."""

    def __init__(self, balls: BallSet):
        self.balls = balls
        self._centers = balls.centers
        self._r2 = balls.radii ** 2

    def powers(self, point: np.ndarray) -> np.ndarray:
        """Power distance of one point to every ball, shape (n,)."""
        diff = self._centers - np.asarray(point, dtype=float)
        return np.einsum("ij,ij->i", diff, diff) - self._r2

    def powers_many(self, points: np.ndarray, indices=None) -> np.ndarray:
        """Power distances of m points to the selected balls, shape (m, k)."""
        points = np.asarray(points, dtype=float).reshape(-1, 3)
        centers = self._centers if indices is None else self._centers[indices]
        r2 = self._r2 if indices is None else self._r2[indices]
        sq = (np.einsum("ij,ij->i", points, points)[:, None]
              - 2.0 * points @ centers.T
              + np.einsum("ij,ij->i", centers, centers)[None, :])
        return sq - r2[None, :]

    def power(self, point: np.ndarray, i: int) -> float:
        diff = np.asarray(point, dtype=float) - self._centers[i]
        return float(diff @ diff) - float(self._r2[i])

    def in_cell(self, point: np.ndarray, i: int, slack: float = 0.0) -> bool:
        """True if the point lies in Vor_i (ties count as inside)."""
        p = self.powers(point)
        return bool(p[i] <= p.min() + slack)

    def cell_of(self, point: np.ndarray) -> int:
        """Index of the Voronoi domain containing the point (lowest index on ties)."""
        return int(np.argmin(self.powers(point)))

    def in_union(self, point: np.ndarray) -> bool:
        return bool(self.powers(point).min() < 0.0)
