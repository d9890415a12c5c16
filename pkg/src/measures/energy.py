"""
Morphometric (nonpolar solvation) energy: a linear combination of the
four intrinsic volumes.
"""

import math
import logging
from dataclasses import dataclass
from typing import Sequence, Tuple

from .intrinsic_volumes import MeasureSet
from ..utils.helpers import validate_coefficients

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MorphometricCoefficients:
    """
    Energy per unit of each measure.

    mu0 acts like a pressure, mu1 like a surface tension, mu2 and mu3 are
    bending rigidities. mu3 multiplies one third of the Gaussian curvature.
    """
    mu0: float = 0.0
    mu1: float = 0.0
    mu2: float = 0.0
    mu3: float = 0.0

    def __post_init__(self):
        check = validate_coefficients(self.as_tuple())
        if not check['valid']:
            raise ValueError(check['error'])

    @classmethod
    def from_sequence(cls, values: Sequence[float]) -> "MorphometricCoefficients":
        values = [float(v) for v in values]
        check = validate_coefficients(values)
        if not check['valid']:
            raise ValueError(check['error'])
        return cls(*values)

    def as_tuple(self) -> Tuple[float, float, float, float]:
        return (self.mu0, self.mu1, self.mu2, self.mu3)


def morphometric_energy(measures: MeasureSet, mu: MorphometricCoefficients) -> float:
    """mu0 V + mu1 A + mu2 M + mu3 G / 3."""
    energy = math.fsum([
        mu.mu0 * measures.volume,
        mu.mu1 * measures.area,
        mu.mu2 * measures.mean,
        mu.mu3 * measures.gauss / 3.0,
    ])
    logger.debug(f"Morphometric energy {energy:.6g} for mu={mu.as_tuple()}")
    return energy
