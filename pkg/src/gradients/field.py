"""
Gradient vectors over the 3n-dimensional state space.
"""

import math
from dataclasses import dataclass
from typing import Dict, Optional

import numpy as np
import pandas as pd

from ..utils.helpers import fsum_vectors


@dataclass
class GradientField:
    """
    A 3n gradient, optionally split into the patch, arc-length and
    arc-fraction parts (mean curvature only).
    """
    g: np.ndarray
    p: Optional[np.ndarray] = None
    q: Optional[np.ndarray] = None
    s: Optional[np.ndarray] = None
    measure: str = ""

    @property
    def n(self) -> int:
        return self.g.size // 3

    @property
    def has_decomposition(self) -> bool:
        return self.p is not None

    def block(self, i: int) -> np.ndarray:
        return self.g[3 * i: 3 * i + 3]

    def directional(self, momentum: np.ndarray) -> float:
        """<g, t> with compensated summation."""
        t = np.asarray(momentum, dtype=float).reshape(-1)
        return math.fsum(self.g * t)

    def norm(self) -> float:
        return float(np.linalg.norm(self.g))

    def parts(self) -> Dict[str, np.ndarray]:
        out = {"g": self.g}
        if self.has_decomposition:
            out.update(p=self.p, q=self.q, s=self.s)
        return out

    def to_frame(self) -> pd.DataFrame:
        """One row per ball with gx, gy, gz (and the parts when present)."""
        columns = {}
        for name, vector in self.parts().items():
            blocks = vector.reshape(-1, 3)
            for axis, label in enumerate("xyz"):
                columns[f"{name}{label}"] = blocks[:, axis]
        frame = pd.DataFrame(columns)
        frame.index.name = "index"
        return frame


class Accumulator:
    """Collects per-ball vector terms and reduces them in index order."""

    def __init__(self, n: int):
        self._terms = [[] for _ in range(n)]

    def add(self, i: int, vector: np.ndarray) -> None:
        self._terms[i].append(np.asarray(vector, dtype=float))

    def sub(self, i: int, vector: np.ndarray) -> None:
        self._terms[i].append(-np.asarray(vector, dtype=float))

    def total(self) -> np.ndarray:
        out = np.zeros((len(self._terms), 3))
        for i, terms in enumerate(self._terms):
            if terms:
                out[i] = fsum_vectors(terms)
        return out.reshape(-1)
