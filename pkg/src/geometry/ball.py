"""
Ball record: center, radius and weight.
"""

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np


@dataclass(frozen=True, eq=False)
class Ball:
    """A closed ball with a (possibly negative) weight."""
    center: np.ndarray
    radius: float
    weight: float = 1.0

    def __post_init__(self):
        center = np.asarray(self.center, dtype=float).reshape(3)
        object.__setattr__(self, "center", center)
        object.__setattr__(self, "radius", float(self.radius))
        object.__setattr__(self, "weight", float(self.weight))
        if not (self.radius > 0 and math.isfinite(self.radius)):
            raise ValueError(f"Ball radius must be positive and finite, got {self.radius}")
        if not math.isfinite(self.weight):
            raise ValueError(f"Ball weight must be finite, got {self.weight}")
        if not np.all(np.isfinite(center)):
            raise ValueError("Ball center must be finite")

    @classmethod
    def from_row(cls, row: Sequence[float]) -> "Ball":
        """Build a ball from an ``(x, y, z, r, w)`` row."""
        x, y, z, r, w = row
        return cls(np.array([x, y, z]), r, w)

    def power(self, point: np.ndarray) -> float:
        """Power distance ||a - x||^2 - r^2 of a point."""
        diff = np.asarray(point, dtype=float) - self.center
        return float(diff @ diff) - self.radius ** 2

    def contains(self, point: np.ndarray) -> bool:
        return self.power(point) <= 0.0
