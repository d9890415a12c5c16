"""
Regular (weighted Delaunay) triangulation of the ball centers, built as
the lower convex hull of the lifted points (x, |x|^2 - r^2) with qhull.
"""

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, FrozenSet, Tuple

import numpy as np
from scipy.spatial import ConvexHull, QhullError

from .ball_set import BallSet
from ..utils.config import DEFAULT_TOLERANCE
from ..utils.exceptions import DegenerateState

logger = logging.getLogger(__name__)

Tet = Tuple[int, int, int, int]

# Lift perturbation used by the retry; far below the orthosphere slack.
JITTER_SCALE = 1e-11
MIN_SLACK = 1e-10


@dataclass(frozen=True, eq=False)
class RegularTriangulation:
    """Tetrahedra of the Delaunay mosaic with their orthospheres."""
    tetrahedra: Tuple[Tet, ...]
    orthocenters: Dict[Tet, np.ndarray] = field(default_factory=dict)
    orthopowers: Dict[Tet, float] = field(default_factory=dict)
    perturbed: bool = False

    def __len__(self) -> int:
        return len(self.tetrahedra)

    def tet_set(self) -> FrozenSet[Tet]:
        return frozenset(self.tetrahedra)

    def triangles(self) -> FrozenSet[Tuple[int, int, int]]:
        return frozenset(f for tet in self.tetrahedra for f in combinations(tet, 3))

    def edges(self) -> FrozenSet[Tuple[int, int]]:
        return frozenset(e for tet in self.tetrahedra for e in combinations(tet, 2))

    def vertices(self) -> FrozenSet[int]:
        return frozenset(v for tet in self.tetrahedra for v in tet)

    def tetrahedra_with(self, face: Tuple[int, ...]) -> Tuple[Tet, ...]:
        face_set = set(face)
        return tuple(t for t in self.tetrahedra if face_set.issubset(t))


def orthosphere(balls: BallSet, tet: Tet) -> Tuple[np.ndarray, float]:
    """
    Point of equal power to the four balls of a tetrahedron.

    Returns:
        (orthocenter, common power distance)

    Raises:
        numpy.linalg.LinAlgError: the centers are coplanar
    """
    x = balls.centers[list(tet)]
    r = balls.radii[list(tet)]
    lift = np.einsum("ij,ij->i", x, x) - r * r
    system = 2.0 * (x[1:] - x[0])
    rhs = lift[1:] - lift[0]
    z = np.linalg.solve(system, rhs)
    diff = z - x[0]
    return z, float(diff @ diff - r[0] * r[0])


def _lower_hull(centers: np.ndarray, lifts: np.ndarray) -> Tuple[Tet, ...]:
    n = len(centers)
    spread = float(lifts.max() - lifts.min())
    sentinel = np.append(centers.mean(axis=0), lifts.max() + 1.0 + spread)
    lifted = np.vstack([np.column_stack([centers, lifts]), sentinel])
    hull = ConvexHull(lifted, qhull_options="Qt")
    tets = []
    for simplex, equation in zip(hull.simplices, hull.equations):
        if n in simplex or equation[3] >= -1e-12:
            continue
        tets.append(tuple(sorted(int(v) for v in simplex)))
    return tuple(sorted(set(tets)))


def _assemble(balls: BallSet, tets: Tuple[Tet, ...], perturbed: bool) -> RegularTriangulation:
    centers, powers = {}, {}
    for tet in tets:
        z, power = orthosphere(balls, tet)
        centers[tet] = z
        powers[tet] = power
    return RegularTriangulation(tets, centers, powers, perturbed)


def _worst_violation(balls: BallSet, mosaic: RegularTriangulation) -> float:
    """Most negative pi_m(z) - pi_tet(z) over tetrahedra and non-vertices m."""
    worst = 0.0
    centers, r2 = balls.centers, balls.radii ** 2
    for tet in mosaic.tetrahedra:
        z = mosaic.orthocenters[tet]
        diff = centers - z
        pw = np.einsum("ij,ij->i", diff, diff) - r2
        pw[list(tet)] = np.inf
        worst = min(worst, float(pw.min()) - mosaic.orthopowers[tet])
    return worst


def build_regular_triangulation(balls: BallSet,
                                tol: float = DEFAULT_TOLERANCE) -> RegularTriangulation:
    """
    Build the Delaunay mosaic of a ball set.

    Args:
        balls: The balls
        tol: Relative tolerance; the empty-orthosphere slack is
             ``max(tol, 1e-10) * scale**2``

    Returns:
        RegularTriangulation (empty for n < 4 or coplanar centers)

    Raises:
        DegenerateState: the empty-orthosphere property fails even after
            the perturbed retry (five Voronoi domains meet)
    """
    n = balls.n
    if n < 4:
        return RegularTriangulation(())
    centers = balls.centers
    spread = centers - centers.mean(axis=0)
    scale = max(float(np.abs(spread).max()), balls.mean_radius)
    if np.linalg.matrix_rank(spread, tol=1e-12 * scale) < 3:
        logger.debug("Centers are coplanar; mosaic has no tetrahedra")
        return RegularTriangulation(())

    lifts = np.einsum("ij,ij->i", centers, centers) - balls.radii ** 2
    slack = max(tol, MIN_SLACK) * scale * scale
    jitter = JITTER_SCALE * scale * scale * np.random.default_rng(n).uniform(-1.0, 1.0, n)

    for perturbed in (False, True):
        try:
            tets = _lower_hull(centers, lifts + jitter if perturbed else lifts)
            mosaic = _assemble(balls, tets, perturbed)
        except (QhullError, np.linalg.LinAlgError) as exc:
            logger.warning(f"Triangulation attempt (perturbed={perturbed}) failed: {exc}")
            continue
        worst = _worst_violation(balls, mosaic)
        if worst >= -slack:
            logger.debug(f"Mosaic: {len(tets)} tetrahedra (perturbed={perturbed})")
            return mosaic
        logger.warning(f"Empty-orthosphere violation {worst:.3e} (perturbed={perturbed})")

    raise DegenerateState("Regular triangulation is degenerate (Condition I)",
                          case_label="FLIP")
