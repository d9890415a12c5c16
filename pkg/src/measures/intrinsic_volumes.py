"""
Weighted volume, area, mean curvature and Gaussian curvature of a union
of balls, evaluated as fraction-weighted sums over the alpha complex.
"""

import math
import logging
from dataclasses import dataclass, field, asdict
from typing import Dict, Optional, Tuple

from ..complex.alpha_complex import AlphaComplex
from ..complex.ball_set import BallSet
from ..geometry.pairs import lambda_ij

logger = logging.getLogger(__name__)

FOUR_PI = 4.0 * math.pi
Triangle = Tuple[int, int, int]


@dataclass
class MeasureSet:
    """The four weighted intrinsic volumes."""
    volume: float
    area: float
    mean: float
    gauss: float

    def as_dict(self) -> Dict[str, float]:
        return asdict(self)


@dataclass(frozen=True)
class CornerSplit:
    """
    Proportions in which the curvature of a boundary corner is shared by
    its three balls. Unlisted corners use equal thirds.
    """
    proportions: Dict[Triangle, Tuple[float, float, float]] = field(default_factory=dict)

    def __post_init__(self):
        for tri, alphas in self.proportions.items():
            if len(alphas) != 3 or any(a < 0.0 or a > 1.0 for a in alphas):
                raise ValueError(f"Corner split for {tri} must be three values in [0, 1]")
            if abs(math.fsum(alphas) - 1.0) > 1e-12:
                raise ValueError(f"Corner split for {tri} must sum to 1, got {sum(alphas)}")

    def for_corner(self, tri: Triangle) -> Tuple[float, float, float]:
        return self.proportions.get(tuple(sorted(tri)), (1.0 / 3.0,) * 3)


EQUAL_THIRDS = CornerSplit()


def _balls(complex_: AlphaComplex, balls: Optional[BallSet]) -> BallSet:
    return balls if balls is not None else complex_.balls


def weighted_volume(complex_: AlphaComplex, balls: Optional[BallSet] = None) -> float:
    """(4 pi / 3) sum_i w_i nu_i r_i^3."""
    balls = _balls(complex_, balls)
    nu = complex_.fractions.vertex_nu
    return (FOUR_PI / 3.0) * math.fsum(
        w * v * r ** 3 for w, v, r in zip(balls.weights, nu, balls.radii))


def weighted_area(complex_: AlphaComplex, balls: Optional[BallSet] = None) -> float:
    """4 pi sum_i w_i sigma_i r_i^2."""
    balls = _balls(complex_, balls)
    sigma = complex_.fractions.vertex_sigma
    return FOUR_PI * math.fsum(
        w * s * r ** 2 for w, s, r in zip(balls.weights, sigma, balls.radii))


def weighted_mean_curvature(complex_: AlphaComplex, balls: Optional[BallSet] = None) -> float:
    """
    Spherical patches minus the circular arcs.

    The arc term runs over unordered pairs, so every arc is counted once
    with half its dihedral angle for each of its two balls.
    """
    balls = _balls(complex_, balls)
    w, r = balls.weights, balls.radii
    sigma = complex_.fractions.vertex_sigma
    terms = [FOUR_PI * w[i] * r[i] * sigma[i] for i in range(balls.n)]
    for (i, j), edge in complex_.fractions.edges.items():
        if edge.sigma > 0.0:
            terms.append(-0.5 * math.pi * (w[i] + w[j]) * edge.pair.r_ij
                         * edge.pair.phi_ij * edge.sigma)
    return math.fsum(terms)


def weighted_gaussian_curvature(complex_: AlphaComplex, balls: Optional[BallSet] = None,
                                split: CornerSplit = EQUAL_THIRDS) -> float:
    """
    Patches, arcs and corners of the boundary.

    Args:
        complex_: Alpha complex with fractions
        balls: Ball set, defaults to the complex's
        split: Sharing of corner curvature among the three balls

    Returns:
        Weighted total Gaussian curvature (4 pi for a single unit-weight ball)
    """
    balls = _balls(complex_, balls)
    w = balls.weights
    sigma = complex_.fractions.vertex_sigma
    terms = [FOUR_PI * w[i] * sigma[i] for i in range(balls.n)]
    for (i, j), edge in complex_.fractions.edges.items():
        if edge.sigma > 0.0:
            lam = lambda_ij(edge.pair, edge.pair.r_i, edge.pair.r_j)
            terms.append(-math.pi * (w[i] + w[j]) * edge.sigma * lam)
    for tri, corner in complex_.fractions.triangles.items():
        if corner.sigma > 0.0:
            alphas = split.for_corner(tri)
            share = math.fsum(a * w[v] for a, v in zip(alphas, tri))
            terms.append(2.0 * share * corner.sigma * corner.triple.phi_ijk)
    return math.fsum(terms)


def compute_measures(complex_: AlphaComplex, balls: Optional[BallSet] = None,
                     split: CornerSplit = EQUAL_THIRDS) -> MeasureSet:
    """Evaluate all four measures on one complex."""
    measures = MeasureSet(
        volume=weighted_volume(complex_, balls),
        area=weighted_area(complex_, balls),
        mean=weighted_mean_curvature(complex_, balls),
        gauss=weighted_gaussian_curvature(complex_, balls, split),
    )
    logger.info(f"Measures: V={measures.volume:.6g} A={measures.area:.6g} "
                f"M={measures.mean:.6g} G={measures.gauss:.6g}")
    return measures
