"""
Detection of states close to a general-position violation.

Every predicate is a discriminant normalized by the mean radius (for
lengths) or its square (for powers). A predicate below the tolerance is
reported, provided the witness point is not buried inside another ball.
"""

import logging
from itertools import combinations
from typing import Dict, List, Optional, Set, Tuple

import numpy as np
from scipy.spatial import cKDTree

from .report import DegeneracyReport, flip_label
from ..complex.alpha_complex import AlphaComplex, build_alpha_complex
from ..complex.ball_set import BallSet
from ..complex.power_diagram import PowerDiagram
from ..complex.triangulation import RegularTriangulation
from ..utils.config import DEFAULT_TOLERANCE
from ..utils.exceptions import DegenerateState

logger = logging.getLogger(__name__)


class _Context:
    def __init__(self, balls: BallSet, complex_: Optional[AlphaComplex], tol: float):
        self.balls = balls
        self.complex = complex_
        self.tol = tol
        self.scale = balls.mean_radius
        self.diagram = PowerDiagram(balls)

    def exposed(self, point: np.ndarray, excluded) -> bool:
        """True if no ball outside ``excluded`` strictly contains the point."""
        powers = self.diagram.powers(point)
        powers[list(excluded)] = np.inf
        return bool(powers.min() >= -self.tol * self.scale ** 2)

    def first_absent_dim(self, vertices: Tuple[int, ...]) -> Optional[int]:
        """Smallest dimension with a face missing from the complex."""
        if self.complex is None:
            return None
        for size in range(1, len(vertices) + 1):
            for face in combinations(vertices, size):
                if face not in self.complex:
                    return size - 1
        return None


def _candidate_pairs(balls: BallSet, slack: float) -> List[Tuple[int, int]]:
    if balls.n < 2:
        return []
    tree = cKDTree(balls.centers)
    reach = 2.0 * float(balls.radii.max()) + slack
    out = []
    for i, j in sorted(tree.query_pairs(reach)):
        d = float(np.linalg.norm(balls.centers[i] - balls.centers[j]))
        if d <= balls.radii[i] + balls.radii[j] + slack:
            out.append((i, j))
    return out


def _pair_reports(ctx: _Context, pairs) -> List[DegeneracyReport]:
    balls, scale = ctx.balls, ctx.scale
    reports = []
    for i, j in pairs:
        x_i, x_j = balls.centers[i], balls.centers[j]
        r_i, r_j = balls.radii[i], balls.radii[j]
        diff = x_i - x_j
        d = float(np.linalg.norm(diff))
        if d == 0.0:
            continue
        external = (d - (r_i + r_j)) / scale
        if abs(external) < ctx.tol and ctx.exposed(x_j + r_j * diff / d, (i, j)):
            reports.append(DegeneracyReport.create("C1", (i, j), external))
        internal = (d - abs(r_i - r_j)) / scale
        if abs(internal) < ctx.tol:
            big, small = (i, j) if r_i >= r_j else (j, i)
            direction = (balls.centers[small] - balls.centers[big]) / d
            if ctx.exposed(balls.centers[big] + balls.radii[big] * direction, (i, j)):
                reports.append(DegeneracyReport.create("N01", (i, j), internal))
    return reports


def triple_discriminant(balls: BallSet, i: int, j: int, k: int) -> Optional[Tuple[float, np.ndarray]]:
    """
    Squared half-chord of S_ijk over the squared mean radius, with x_ijk.

    Returns:
        (h^2 / r^2, x_ijk), or None for collinear centers
    """
    x_i = balls.centers[i]
    a = balls.centers[j] - x_i
    b = balls.centers[k] - x_i
    cross = np.cross(a, b)
    norm = float(np.linalg.norm(cross))
    if norm <= 1e-12 * float(np.linalg.norm(a) * np.linalg.norm(b)):
        return None
    r_i, r_j, r_k = balls.radii[i], balls.radii[j], balls.radii[k]
    system = np.vstack([2.0 * a, 2.0 * b, cross / norm])
    rhs = np.array([r_i ** 2 - r_j ** 2 + a @ a, r_i ** 2 - r_k ** 2 + b @ b, 0.0])
    offset = np.linalg.solve(system, rhs)
    mean_r = (r_i + r_j + r_k) / 3.0
    return (r_i ** 2 - float(offset @ offset)) / mean_r ** 2, x_i + offset


def _triple_reports(ctx: _Context, pairs) -> List[DegeneracyReport]:
    near: Dict[int, Set[int]] = {}
    for i, j in pairs:
        near.setdefault(i, set()).add(j)
        near.setdefault(j, set()).add(i)
    reports = []
    for i, j in pairs:
        for k in sorted(near[i] & near[j]):
            if k <= j:
                continue
            found = triple_discriminant(ctx.balls, i, j, k)
            if found is None:
                continue
            h2, point = found
            if abs(h2) >= ctx.tol or not ctx.exposed(point, (i, j, k)):
                continue
            absent = ctx.first_absent_dim((i, j, k))
            label = {0: "N02", 1: "N12"}.get(absent, "C2")
            reports.append(DegeneracyReport.create(label, (i, j, k), h2))
    return reports


def _tet_reports(ctx: _Context, mosaic: RegularTriangulation) -> List[DegeneracyReport]:
    reports = []
    for tet in mosaic.tetrahedra:
        power = mosaic.orthopowers[tet] / ctx.scale ** 2
        if abs(power) >= ctx.tol:
            continue
        absent = ctx.first_absent_dim(tet)
        label = {0: "N03", 1: "N13", 2: "N23"}.get(absent, "C3")
        reports.append(DegeneracyReport.create(label, tet, power))
    return reports


def _flip_reports(ctx: _Context, mosaic: RegularTriangulation) -> List[DegeneracyReport]:
    tets = mosaic.tet_set()
    balls = ctx.balls

    def excess(m: int, tet) -> float:
        z = mosaic.orthocenters[tet]
        return (ctx.diagram.power(z, m) - mosaic.orthopowers[tet]) / ctx.scale ** 2

    quintuples: Dict[Tuple[int, ...], float] = {}
    by_triangle: Dict[Tuple[int, int, int], List] = {}
    for tet in mosaic.tetrahedra:
        for tri in combinations(tet, 3):
            by_triangle.setdefault(tri, []).append(tet)
    for tri, owners in by_triangle.items():
        if len(owners) != 2:
            continue
        first, second = owners
        apex = next(v for v in second if v not in first)
        value = excess(apex, first)
        if abs(value) < ctx.tol:
            quintuples.setdefault(tuple(sorted(set(first) | {apex})), value)

    redundant = set(range(balls.n)) - set(mosaic.vertices())
    for m in sorted(redundant):
        for tet in mosaic.tetrahedra:
            value = excess(m, tet)
            if abs(value) < ctx.tol:
                quintuples.setdefault(tuple(sorted(tet + (m,))), value)

    reports = []
    for quintuple, value in sorted(quintuples.items()):
        spanned = sum(1 for t in combinations(quintuple, 4) if t in tets)
        reports.append(DegeneracyReport.create(flip_label(spanned, 5 - spanned),
                                               quintuple, value))
    return reports


def check_general_position(complex_: Optional[AlphaComplex], balls: Optional[BallSet] = None,
                           tol: float = DEFAULT_TOLERANCE) -> List[DegeneracyReport]:
    """
    Report every violation of general position within tolerance.

    Args:
        complex_: Alpha complex of the state, or None to build it here
        balls: Ball set, defaults to the complex's
        tol: Normalized discriminant threshold

    Returns:
        Reports sorted by proximity; empty for a generic state
    """
    if complex_ is None and balls is None:
        raise ValueError("Either a complex or a ball set is required")
    balls = balls if balls is not None else complex_.balls
    mosaic = None
    if complex_ is None:
        try:
            complex_ = build_alpha_complex(balls, tol)
        except DegenerateState as exc:
            logger.warning(f"Complex unavailable for labeling: {exc}")
    if complex_ is not None:
        mosaic = complex_.mosaic

    ctx = _Context(balls, complex_, tol)
    pairs = _candidate_pairs(balls, tol * ctx.scale)
    reports = _pair_reports(ctx, pairs) + _triple_reports(ctx, pairs)
    if mosaic is not None:
        reports += _tet_reports(ctx, mosaic) + _flip_reports(ctx, mosaic)
    reports.sort(key=lambda r: (r.proximity, r.case_label, r.involved))
    if reports:
        logger.info(f"Found {len(reports)} degeneracies; closest {reports[0].case_label} "
                    f"at {reports[0].proximity:.3e}")
    return reports
