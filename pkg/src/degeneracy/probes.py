"""
Numerical order probes: how the weighted mean curvature and its gradient
behave along a trajectory through a single event.
"""

import math
import logging
from typing import Callable, Sequence

import numpy as np
import pandas as pd
from sklearn.linear_model import LinearRegression

from .report import DegeneracyReport, OrderProbe
from ..complex.alpha_complex import build_alpha_complex
from ..complex.ball_set import BallSet
from ..gradients.mean_curvature import mean_curvature_gradient
from ..measures.intrinsic_volumes import weighted_mean_curvature
from ..utils.config import DEFAULT_TOLERANCE

logger = logging.getLogger(__name__)

EPS_GRID = (1e-2, 1e-3, 1e-4, 1e-5)
EXPONENT_TOLERANCE = 0.1
# Log-log slope of the gradient norm below which it counts as divergent.
DIVERGENCE_SLOPE = -0.25


def log_log_slope(x: Sequence[float], y: Sequence[float]) -> float:
    """Least-squares slope of log(y) against log(x)."""
    features = np.log(np.asarray(x, dtype=float)).reshape(-1, 1)
    target = np.log(np.asarray(y, dtype=float))
    return float(LinearRegression().fit(features, target).coef_[0])


def probe_order(balls: BallSet, trajectory: Callable[[float], BallSet],
                case: DegeneracyReport, eps_grid: Sequence[float] = EPS_GRID,
                tol: float = DEFAULT_TOLERANCE) -> OrderProbe:
    """
    Measure the order of the mean-curvature change at an event.

    Args:
        balls: State at the event (kept for reporting)
        trajectory: eps -> state; eps = 0 is the event and eps > 0 the
            side where the event's simplices are present
        case: The event being probed
        eps_grid: Positive distances to the event
        tol: Tolerance for the complexes along the trajectory

    Returns:
        OrderProbe with the fitted exponent and the gradient verdict
    """
    rows = []
    for eps in eps_grid:
        present = build_alpha_complex(trajectory(eps), tol)
        absent = build_alpha_complex(trajectory(-eps), tol)
        mean_plus = weighted_mean_curvature(present)
        mean_minus = weighted_mean_curvature(absent)
        gradient = mean_curvature_gradient(present)
        rows.append({
            "eps": eps,
            "mean_plus": mean_plus,
            "mean_minus": mean_minus,
            "delta_mean": abs(mean_plus - mean_minus),
            "gradient_norm": gradient.norm(),
        })
    samples = pd.DataFrame(rows)

    exponent = log_log_slope(samples["eps"], samples["delta_mean"].clip(lower=1e-300))
    gradient_slope = log_log_slope(samples["eps"], samples["gradient_norm"].clip(lower=1e-300))
    bounded = gradient_slope > DIVERGENCE_SLOPE
    expected = case.predicted_mean_order.exponent
    expected_bounded = case.predicted_gradient_jump.value == "1"
    matches = abs(exponent - expected) <= EXPONENT_TOLERANCE and bounded == expected_bounded
    logger.info(f"{case.case_label}: exponent {exponent:.3f} (expected {expected}), "
                f"gradient slope {gradient_slope:.3f}, matches={matches}")
    if not math.isfinite(exponent):
        logger.warning(f"Non-finite exponent for {case.case_label} on {balls.n} balls")
    return OrderProbe(case.case_label, exponent, gradient_slope, bounded, matches, samples)
