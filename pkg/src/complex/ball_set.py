"""
Ordered collection of balls with array views and state updates.
"""

import logging
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence, Tuple

import numpy as np

from ..geometry.ball import Ball

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class BallSet:
    """
    The balls of a space-filling diagram, indexed 0..n-1.

    Instances are immutable; every update returns a new set.
    """
    balls: Tuple[Ball, ...]

    def __post_init__(self):
        balls = tuple(self.balls)
        if not balls:
            raise ValueError("A ball set needs at least one ball")
        object.__setattr__(self, "balls", balls)
        object.__setattr__(self, "_centers", np.array([b.center for b in balls]))
        object.__setattr__(self, "_radii", np.array([b.radius for b in balls]))
        object.__setattr__(self, "_weights", np.array([b.weight for b in balls]))
        for array in (self._centers, self._radii, self._weights):
            array.setflags(write=False)

    @classmethod
    def from_arrays(cls, centers: np.ndarray, radii: Sequence[float],
                    weights: Optional[Sequence[float]] = None) -> "BallSet":
        """
        Build a set from array data.

        Args:
            centers: (n, 3) centers
            radii: n radii
            weights: n weights, default all ones
        """
        centers = np.asarray(centers, dtype=float).reshape(-1, 3)
        radii = np.broadcast_to(np.asarray(radii, dtype=float), (len(centers),))
        if weights is None:
            weights = np.ones(len(centers))
        weights = np.broadcast_to(np.asarray(weights, dtype=float), (len(centers),))
        return cls(tuple(Ball(c, r, w) for c, r, w in zip(centers, radii, weights)))

    @property
    def n(self) -> int:
        return len(self.balls)

    @property
    def centers(self) -> np.ndarray:
        return self._centers

    @property
    def radii(self) -> np.ndarray:
        return self._radii

    @property
    def weights(self) -> np.ndarray:
        return self._weights

    @property
    def mean_radius(self) -> float:
        return float(self._radii.mean())

    def __len__(self) -> int:
        return len(self.balls)

    def __iter__(self) -> Iterator[Ball]:
        return iter(self.balls)

    def __getitem__(self, index: int) -> Ball:
        return self.balls[index]

    def state_vector(self) -> np.ndarray:
        """Concatenated centers, shape (3n,)."""
        return self._centers.reshape(-1).copy()

    def with_centers(self, centers: np.ndarray) -> "BallSet":
        """Same radii and weights at new centers (shape (n, 3) or (3n,))."""
        centers = np.asarray(centers, dtype=float).reshape(self.n, 3)
        return BallSet.from_arrays(centers, self._radii, self._weights)

    def moved(self, momentum: np.ndarray, step: float) -> "BallSet":
        """Centers advanced by ``step`` along a 3n momentum."""
        t = np.asarray(momentum, dtype=float).reshape(self.n, 3)
        return self.with_centers(self._centers + step * t)

    def with_radii(self, radii: Sequence[float]) -> "BallSet":
        return BallSet.from_arrays(self._centers, radii, self._weights)

    def with_weights(self, weights: Sequence[float]) -> "BallSet":
        return BallSet.from_arrays(self._centers, self._radii, weights)

    def inflated(self, probe: float) -> "BallSet":
        """
        Solvent-accessible model: every radius grown by ``probe``
        (1.4 for water when radii are van der Waals radii in Angstrom).
        """
        if probe != 0.0:
            logger.debug(f"Inflating {self.n} radii by probe {probe}")
        return self.with_radii(self._radii + probe)

    def transformed(self, rotation: np.ndarray, translation: np.ndarray) -> "BallSet":
        """Rigidly moved copy: x -> R x + b."""
        rotation = np.asarray(rotation, dtype=float)
        return self.with_centers(self._centers @ rotation.T + np.asarray(translation, dtype=float))
