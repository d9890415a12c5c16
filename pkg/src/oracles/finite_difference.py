"""
Central finite differences of measures along a momentum.
"""

import logging
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from ..complex.alpha_complex import AlphaComplex, build_alpha_complex
from ..complex.ball_set import BallSet
from ..utils.config import DEFAULT_FD_STEP, DEFAULT_TOLERANCE
from ..utils.exceptions import CrossedDegeneracy

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FDConfig:
    """Step, scheme and acceptance threshold of a finite-difference check."""
    step: float = DEFAULT_FD_STEP
    scheme: str = "central"
    rel_tol: float = 1e-6
    abs_tol: float = 1e-8
    check_combinatorics: bool = True

    def __post_init__(self):
        if not self.step > 0:
            raise ValueError(f"Finite-difference step must be positive, got {self.step}")
        if self.scheme != "central":
            raise ValueError(f"Unsupported scheme {self.scheme!r}")

    def agrees(self, analytic: float, numeric: float) -> bool:
        """|analytic - numeric| <= rel_tol * max(|numeric|, |analytic|) + abs_tol."""
        scale = max(abs(numeric), abs(analytic))
        return abs(analytic - numeric) <= self.rel_tol * scale + self.abs_tol


class ComplexMeasure:
    """A measure of the alpha complex, callable on ball sets."""

    def __init__(self, fn: Callable[[AlphaComplex], float],
                 tol: float = DEFAULT_TOLERANCE, name: Optional[str] = None):
        self.fn = fn
        self.tol = tol
        self.name = name or getattr(fn, "__name__", "measure")

    def __call__(self, balls: BallSet) -> float:
        return self.fn(build_alpha_complex(balls, self.tol))

    def on_complex(self, complex_: AlphaComplex) -> float:
        return self.fn(complex_)


def _combinatorial_key(complex_: AlphaComplex):
    return complex_.key(), complex_.mosaic.tet_set()


def fd_directional(measure: Callable[[BallSet], float], balls: BallSet,
                   momentum: np.ndarray, cfg: FDConfig = FDConfig(),
                   tol: float = DEFAULT_TOLERANCE) -> float:
    """
    (F(x + h t) - F(x - h t)) / (2 h).

    Args:
        measure: Function of the state; a ComplexMeasure reuses the
            complexes built for the combinatorial check
        balls: State x
        momentum: Direction t (3n)
        cfg: Step and checks
        tol: Tolerance for the straddle complexes

    Raises:
        CrossedDegeneracy: the two straddle states have different complexes
    """
    h = cfg.step
    plus = balls.moved(momentum, h)
    minus = balls.moved(momentum, -h)

    if cfg.check_combinatorics or isinstance(measure, ComplexMeasure):
        complex_tol = measure.tol if isinstance(measure, ComplexMeasure) else tol
        c_plus = build_alpha_complex(plus, complex_tol)
        c_minus = build_alpha_complex(minus, complex_tol)
        if cfg.check_combinatorics and _combinatorial_key(c_plus) != _combinatorial_key(c_minus):
            raise CrossedDegeneracy(f"Straddle of width {2 * h:g} crosses a combinatorial change")
        if isinstance(measure, ComplexMeasure):
            return (measure.on_complex(c_plus) - measure.on_complex(c_minus)) / (2.0 * h)

    return (measure(plus) - measure(minus)) / (2.0 * h)
