"""
Steiner oracle: grow every radius by eps, fit the exact union volume by
a cubic in eps and read area and mean curvature off its coefficients.
"""

import math
import logging
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np
import pandas as pd
from sklearn.linear_model import LinearRegression

from ..complex.alpha_complex import AlphaComplex, build_alpha_complex
from ..complex.ball_set import BallSet
from ..measures.intrinsic_volumes import weighted_volume
from ..utils.config import DEFAULT_TOLERANCE
from ..utils.exceptions import TopologyChange

logger = logging.getLogger(__name__)

EPS_GRID = (0.0, 0.5e-3, 1e-3, 2e-3, 4e-3)


@dataclass
class SteinerFit:
    """
    Coefficients of V(eps) = V + A eps + c2 eps^2 + c3 eps^3.

    ``c2`` weighs each crevice by tan(phi/2); ``mean_estimate`` replaces
    that by phi/2 and is comparable to the weighted mean curvature with
    unit weights.
    """
    volume: float
    area_estimate: float
    c2: float
    c3: float
    mean_estimate: float
    residual: float
    samples: pd.DataFrame = field(repr=False, default_factory=pd.DataFrame)


def crevice_correction(complex_: AlphaComplex) -> float:
    """sum over boundary circles of 2 pi r_ij sigma_ij (tan(phi/2) - phi/2)."""
    terms = []
    for edge in complex_.fractions.edges.values():
        if edge.sigma > 0.0:
            half = 0.5 * edge.pair.phi_ij
            terms.append(2.0 * math.pi * edge.pair.r_ij * edge.sigma * (math.tan(half) - half))
    return math.fsum(terms)


def steiner_fit(balls: BallSet, eps_grid: Sequence[float] = EPS_GRID,
                tol: float = DEFAULT_TOLERANCE) -> SteinerFit:
    """
    Fit the thickened union volume by a cubic.

    Args:
        balls: The ball set; weights are ignored
        eps_grid: Thickenings, the first one 0
        tol: Tolerance for the complexes

    Returns:
        SteinerFit

    Raises:
        TopologyChange: the alpha complex changes across the grid
    """
    unit = balls.with_weights(np.ones(balls.n))
    base = build_alpha_complex(unit, tol)
    eps = np.asarray(eps_grid, dtype=float)
    volumes = []
    for e in eps:
        complex_ = base if e == 0.0 else build_alpha_complex(unit.inflated(e), tol)
        if complex_.key() != base.key():
            raise TopologyChange(f"Alpha complex changes at thickening {e:g}")
        volumes.append(weighted_volume(complex_))
    volumes = np.array(volumes)

    scale = float(eps.max())
    u = eps / scale
    features = np.column_stack([u, u ** 2, u ** 3])
    model = LinearRegression().fit(features, volumes)
    b1, b2, b3 = model.coef_
    fitted = model.predict(features)
    residual = float(np.max(np.abs(fitted - volumes)) / max(abs(volumes[0]), 1e-300))

    c2 = b2 / scale ** 2
    fit = SteinerFit(
        volume=float(model.intercept_),
        area_estimate=b1 / scale,
        c2=c2,
        c3=b3 / scale ** 3,
        mean_estimate=c2 + crevice_correction(base),
        residual=residual,
        samples=pd.DataFrame({"eps": eps, "volume": volumes, "fitted": fitted}),
    )
    logger.info(f"Steiner fit: area {fit.area_estimate:.8g}, mean {fit.mean_estimate:.8g}, "
                f"residual {residual:.2e}")
    return fit
