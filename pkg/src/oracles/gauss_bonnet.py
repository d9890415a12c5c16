"""
Gauss-Bonnet oracle: the total Gaussian curvature of the boundary of a
union of balls is 2 pi times its Euler characteristic.

The Euler characteristic is counted on the boundary itself. Corners are
the exposed points of the triple-point pairs, arcs the free arcs of the
intersection circles and patches the free regions of each sphere:

    chi = corners - arcs + sum_i (2 patches_i - loops_i)

An open patch with b boundary loops contributes 2 - b, a full circle
contributes nothing. The union retracts to the alpha shape, so the count
must equal twice the Euler characteristic of the alpha complex; that
identity is kept as a cross-check.
"""

import math
import logging
from dataclasses import dataclass
from typing import Dict, Hashable, List, Tuple

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from ..complex.alpha_complex import AlphaComplex
from ..complex.ball_set import BallSet
from ..complex.fractions import Fractions
from ..degeneracy.detector import check_general_position
from ..utils.config import DEFAULT_TOLERANCE
from ..utils.exceptions import DegenerateState

logger = logging.getLogger(__name__)

Corner = Tuple[Tuple[int, int, int], int]


@dataclass
class GaussBonnetResult:
    """Total curvature with the boundary counts it was derived from."""
    value: float
    euler_characteristic: int
    complex_euler_characteristic: int
    corner_count: int
    arc_count: int
    boundary_balls: int
    full_circles: int = 0
    patch_count: int = 0
    loop_count: int = 0
    triangle_corners: int = 0

    @property
    def arcs_with_ends(self) -> int:
        return self.arc_count - self.full_circles

    def agrees_with_complex(self) -> bool:
        return self.euler_characteristic == 2 * self.complex_euler_characteristic

    def consistent(self) -> bool:
        """Every corner closes three arc ends and the two counts of chi agree."""
        return (3 * self.corner_count == 2 * self.arcs_with_ends
                and self.corner_count == self.triangle_corners
                and self.agrees_with_complex())


def _components(size: int, links: List[Tuple[int, int]]) -> int:
    if size == 0:
        return 0
    if not links:
        return size
    rows, cols = zip(*links)
    graph = coo_matrix((np.ones(len(links)), (rows, cols)), shape=(size, size))
    count, _ = connected_components(graph, directed=False)
    return int(count)


def _corner(balls: BallSet, pair: Tuple[int, int], k: int, point: np.ndarray) -> Corner:
    """Name an arc end by its triple and the side of the center plane it lies on."""
    key = tuple(sorted((pair[0], pair[1], k)))
    x = balls.centers[list(key)]
    side = float(np.linalg.det(np.stack([x[1] - x[0], x[2] - x[0], point - x[0]])))
    return key, 0 if side > 0.0 else 1


def _cap_components(i: int, balls: BallSet, neighbors: Tuple[int, ...]) -> int:
    """Connected components of the part of S_i inside the other balls."""
    x_i, r_i = balls.centers[i], balls.radii[i]
    axes, angles = [], []
    for j in neighbors:
        offset = balls.centers[j] - x_i
        d = float(np.linalg.norm(offset))
        r_j = balls.radii[j]
        if d + r_i <= r_j:
            return 1
        if d + r_j <= r_i:
            continue
        xi = (d * d + r_i * r_i - r_j * r_j) / (2.0 * d)
        axes.append(offset / d)
        angles.append(math.acos(max(-1.0, min(1.0, xi / r_i))))
    links = []
    for a in range(len(axes)):
        for b in range(a + 1, len(axes)):
            between = math.acos(max(-1.0, min(1.0, float(axes[a] @ axes[b]))))
            if between <= angles[a] + angles[b]:
                links.append((a, b))
    return _components(len(axes), links)


def _boundary_loops(i: int, balls: BallSet, fractions: Fractions) -> Tuple[int, set]:
    """Closed curves of the boundary on S_i, and the corners they pass through."""
    nodes: Dict[Hashable, int] = {}
    links = []
    full = 0
    for key, edge in fractions.edges.items():
        if i not in key:
            continue
        if edge.full_circle:
            full += 1
            continue
        for arc in edge.arcs:
            ends = [_corner(balls, key, arc.start_ball, edge.point_at(arc.start)),
                    _corner(balls, key, arc.end_ball, edge.point_at(arc.end))]
            ids = [nodes.setdefault(c, len(nodes)) for c in ends]
            links.append((ids[0], ids[1]))
    return full + _components(len(nodes), links), set(nodes)


def gauss_bonnet(complex_: AlphaComplex, tol: float = DEFAULT_TOLERANCE) -> GaussBonnetResult:
    """
    2 pi chi of the boundary of the union, chi counted from the boundary.

    Raises:
        DegenerateState: the state violates general position
    """
    reports = check_general_position(complex_, tol=tol)
    if reports:
        first = reports[0]
        raise DegenerateState(f"Boundary is degenerate ({first.case_label})",
                              case_label=first.case_label, involved=first.involved,
                              report=first)
    balls = complex_.balls
    fractions = complex_.fractions

    corners = set()
    patches = loops = boundary_balls = 0
    sphere_terms = 0
    for i in range(balls.n):
        loops_i, corners_i = _boundary_loops(i, balls, fractions)
        patches_i = loops_i + 1 - _cap_components(i, balls, fractions.neighbors[i])
        corners |= corners_i
        loops += loops_i
        patches += patches_i
        boundary_balls += int(patches_i > 0)
        sphere_terms += 2 * patches_i - loops_i

    full = sum(1 for e in fractions.edges.values() if e.full_circle)
    with_ends = sum(len(e.arcs) for e in fractions.edges.values())
    chi = len(corners) - with_ends + sphere_terms
    chi_complex = complex_.euler_characteristic()
    triangle_corners = int(round(sum(2.0 * t.sigma for t in fractions.triangles.values())))
    if chi != 2 * chi_complex:
        logger.warning(f"Boundary count chi={chi} disagrees with twice the complex's "
                       f"Euler characteristic {2 * chi_complex}")
    logger.debug(f"Boundary: chi={chi}, {len(corners)} corners, {with_ends + full} arcs, "
                 f"{patches} patches, {loops} loops")
    return GaussBonnetResult(
        value=2.0 * math.pi * chi,
        euler_characteristic=chi,
        complex_euler_characteristic=chi_complex,
        corner_count=len(corners),
        arc_count=with_ends + full,
        boundary_balls=boundary_balls,
        full_circles=full,
        patch_count=patches,
        loop_count=loops,
        triangle_corners=triangle_corners,
    )
