"""
Voronoi-clipped fractions of balls, disks and segments (nu) and of
spheres, circles and point pairs (sigma).

Every circle S_ij is clipped against the balls meeting B_i; the free arcs
keep the index of the ball that bounds each end, which is what the
gradient code needs at the corners. Sphere fractions follow from the
Gauss-Bonnet identity for the convex body B_i ∩ Vor_i, ball fractions
from the divergence theorem over the same body.
"""

import math
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple, TYPE_CHECKING

import numpy as np
from scipy.spatial import cKDTree

from .ball_set import BallSet
from .power_diagram import PowerDiagram
from ..geometry.pairs import PairGeometry, pair_geometry
from ..geometry.triples import TripleGeometry, triple_geometry, spherical_excess
from ..utils.config import DEFAULT_TOLERANCE
from ..utils.exceptions import DisjointOrNested, NoTriplePoint
from ..utils.helpers import orthonormal_frame

if TYPE_CHECKING:
    from .alpha_complex import AlphaComplex

logger = logging.getLogger(__name__)

TWO_PI = 2.0 * math.pi
# Fractions below this are rounding noise.
FRACTION_FLOOR = 1e-14

Edge = Tuple[int, int]
Triangle = Tuple[int, int, int]


@dataclass(frozen=True)
class FreeArc:
    """Arc [start, end] of S_ij outside every other ball."""
    start: float
    end: float
    start_ball: int
    end_ball: int

    @property
    def length(self) -> float:
        return self.end - self.start


@dataclass(eq=False)
class EdgeFractions:
    """Fractions and clipped geometry of a pair of intersecting spheres."""
    vertices: Edge
    pair: PairGeometry
    frame: np.ndarray
    sigma: float
    nu: float
    arcs: Tuple[FreeArc, ...]
    full_circle: bool
    centroid_offset: np.ndarray = field(default_factory=lambda: np.zeros(3))

    def point_at(self, theta: float) -> np.ndarray:
        e1, e2 = self.frame
        return self.pair.x_ij + self.pair.r_ij * (math.cos(theta) * e1 + math.sin(theta) * e2)

    def arc_direction_integral(self) -> np.ndarray:
        """Integral of the unit radial direction over the free arcs."""
        e1, e2 = self.frame
        total = np.zeros(3)
        for arc in self.arcs:
            total += (math.sin(arc.end) - math.sin(arc.start)) * e1
            total += (math.cos(arc.start) - math.cos(arc.end)) * e2
        return total

    def corners(self) -> List[Tuple[np.ndarray, int]]:
        """Arc endpoints with the index of the ball bounding each."""
        out = []
        for arc in self.arcs:
            out.append((self.point_at(arc.start), arc.start_ball))
            out.append((self.point_at(arc.end), arc.end_ball))
        return out


@dataclass(eq=False)
class TriangleFractions:
    """Fractions of the point pair S_ijk and of its radical segment."""
    vertices: Triangle
    triple: TripleGeometry
    sigma: float
    nu: float
    exposed: Tuple[bool, bool]
    segment: Optional[Tuple[float, float]]

    def segment_midpoint(self) -> np.ndarray:
        lo, hi = self.segment
        return self.triple.x_ijk + 0.5 * (lo + hi) * self.triple.normal

    def segment_length(self) -> float:
        if self.segment is None:
            return 0.0
        return self.segment[1] - self.segment[0]

    def exposed_points(self) -> List[np.ndarray]:
        points = []
        if self.exposed[0]:
            points.append(self.triple.P_plus)
        if self.exposed[1]:
            points.append(self.triple.P_minus)
        return points


@dataclass(eq=False)
class Fractions:
    """All fraction attributes of a ball set."""
    vertex_sigma: np.ndarray
    vertex_nu: np.ndarray
    edges: Dict[Edge, EdgeFractions]
    triangles: Dict[Triangle, TriangleFractions]
    tetrahedra: Dict[Tuple[int, int, int, int], float]
    neighbors: Dict[int, Tuple[int, ...]]

    def edges_at(self, i: int) -> List[EdgeFractions]:
        return [e for key, e in self.edges.items() if i in key]

    def triangles_at(self, edge: Edge) -> List[TriangleFractions]:
        return [t for key, t in self.triangles.items() if edge[0] in key and edge[1] in key]


def _clip(value: float) -> float:
    if value < FRACTION_FLOOR:
        return 0.0
    return min(1.0, value)


def _neighbors(balls: BallSet) -> Dict[int, Tuple[int, ...]]:
    """Balls whose interiors meet B_i, nested ones included."""
    n = balls.n
    found: Dict[int, List[int]] = {i: [] for i in range(n)}
    if n == 1:
        return {0: ()}
    tree = cKDTree(balls.centers)
    reach = 2.0 * float(balls.radii.max())
    for i, j in sorted(tree.query_pairs(reach)):
        d = float(np.linalg.norm(balls.centers[i] - balls.centers[j]))
        if d < balls.radii[i] + balls.radii[j]:
            found[i].append(j)
            found[j].append(i)
    return {i: tuple(sorted(v)) for i, v in found.items()}


def _covered_intervals(pair: PairGeometry, frame: np.ndarray, balls: BallSet,
                       others: Tuple[int, ...]):
    """
    Angular intervals of S_ij inside each other ball.

    Returns:
        (intervals, fully_covered) where intervals are (start, end, ball)
    """
    e1, e2 = frame
    r = pair.r_ij
    intervals = []
    for k in others:
        y = pair.x_ij - balls.centers[k]
        a = float(y @ y) + r * r - balls.radii[k] ** 2
        y1, y2 = float(y @ e1), float(y @ e2)
        b = 2.0 * r * math.hypot(y1, y2)
        if b <= 1e-15 * max(r, 1.0):
            if a < 0.0:
                return [], True
            continue
        c = -a / b
        if c >= 1.0:
            return [], True
        if c <= -1.0:
            continue
        beta = math.acos(c)
        theta0 = math.atan2(y2, y1)
        start = (theta0 + beta) % TWO_PI
        intervals.append((start, start + TWO_PI - 2.0 * beta, k))
    return intervals, False


def _free_arcs(intervals) -> Tuple[FreeArc, ...]:
    """Complement of a union of circular intervals, ties broken by ball index."""
    unrolled = sorted(
        (s + shift, e + shift, k)
        for s, e, k in intervals
        for shift in (-TWO_PI, 0.0, TWO_PI)
    )
    arcs = []
    reach, reach_ball = unrolled[0][1], unrolled[0][2]
    for s, e, k in unrolled[1:]:
        if s > reach:
            if 0.0 <= reach < TWO_PI:
                arcs.append(FreeArc(reach, s, reach_ball, k))
            reach, reach_ball = e, k
        elif e > reach:
            reach, reach_ball = e, k
    return tuple(arcs)


def _edge_fractions(pair: PairGeometry, key: Edge, balls: BallSet,
                    others: Tuple[int, ...]) -> EdgeFractions:
    frame = orthonormal_frame(pair.u_ij)
    intervals, covered = _covered_intervals(pair, frame, balls, others)
    if covered:
        return EdgeFractions(key, pair, frame, 0.0, 0.0, (), False)
    if not intervals:
        return EdgeFractions(key, pair, frame, 1.0, 1.0, (), True)
    arcs = _free_arcs(intervals)
    sigma = _clip(math.fsum(arc.length for arc in arcs) / TWO_PI)
    return EdgeFractions(key, pair, frame, sigma, sigma, arcs, False)


def _triangle_fractions(triple: TripleGeometry, key: Triangle, balls: BallSet,
                        diagram: PowerDiagram, others: Tuple[int, ...]) -> TriangleFractions:
    i = key[0]
    h = triple.r_ijk
    lo, hi = -h, h
    base, normal = triple.x_ijk, triple.normal
    x_i = balls.centers[i]
    plus_free = minus_free = True
    empty = False
    pi_i_base = diagram.power(base, i)
    for l in others:
        f0 = diagram.power(base, l) - pi_i_base
        slope = 2.0 * float(normal @ (x_i - balls.centers[l]))
        plus_free = plus_free and f0 + slope * h >= 0.0
        minus_free = minus_free and f0 - slope * h >= 0.0
        if slope > 0.0:
            lo = max(lo, -f0 / slope)
        elif slope < 0.0:
            hi = min(hi, -f0 / slope)
        elif f0 < 0.0:
            empty = True
    if empty or hi <= lo:
        segment, nu = None, 0.0
    else:
        segment, nu = (lo, hi), _clip((hi - lo) / (2.0 * h))
    sigma = 0.5 * (int(plus_free) + int(minus_free))
    return TriangleFractions(key, triple, sigma, nu, (plus_free, minus_free), segment)


def _complete_edge(edge: EdgeFractions, balls: BallSet,
                   triangles: List[TriangleFractions]) -> None:
    """Add the straight sides of B_ij ∩ Vor_ij to nu_ij and its centroid."""
    pair = edge.pair
    r = pair.r_ij
    disk = math.pi * r * r
    area_terms = [edge.sigma * disk]
    moment = (r ** 3 / 3.0) * edge.arc_direction_integral()
    for tri in triangles:
        if tri.segment is None:
            continue
        k = next(v for v in tri.vertices if v not in edge.vertices)
        toward_k = balls.centers[k] - pair.x_ij
        toward_k = toward_k - float(toward_k @ pair.u_ij) * pair.u_ij
        outward = toward_k / np.linalg.norm(toward_k)
        height = float((tri.triple.x_ijk - pair.x_ij) @ outward)
        length = tri.segment_length()
        area_terms.append(0.5 * height * length)
        moment = moment + (height * length / 3.0) * (tri.segment_midpoint() - pair.x_ij)
    area = math.fsum(area_terms)
    edge.nu = _clip(area / disk)
    edge.centroid_offset = moment / area if area > FRACTION_FLOOR * disk else np.zeros(3)


def _sphere_fraction(i: int, balls: BallSet, edges: List[EdgeFractions],
                     triangles: Dict[Triangle, TriangleFractions],
                     alpha_tets: List[Tuple[int, int, int, int]],
                     diagram: PowerDiagram, neighbors: Tuple[int, ...]) -> float:
    """Gauss-Bonnet for the convex body B_i ∩ Vor_i."""
    x_i, r_i = balls.centers[i], balls.radii[i]
    if not any(e.sigma > 0.0 for e in edges):
        probe = x_i + r_i * np.array([0.48, 0.6, 0.64])
        free = all(diagram.power(probe, l) >= 0.0 for l in neighbors)
        return 1.0 if free else 0.0

    def direction(j: int) -> np.ndarray:
        v = balls.centers[j] - x_i
        return v / np.linalg.norm(v)

    turning = []
    for e in edges:
        xi = e.pair.xi_i if e.vertices[0] == i else e.pair.xi_j
        turning.append(TWO_PI * (1.0 - xi / r_i) * e.sigma)
    for key, tri in triangles.items():
        if i not in key or tri.sigma == 0.0:
            continue
        j, k = (v for v in key if v != i)
        for P in tri.exposed_points():
            turning.append(spherical_excess((P - x_i) / r_i, direction(j), direction(k)))
    for tet in alpha_tets:
        j, k, l = (v for v in tet if v != i)
        turning.append(spherical_excess(direction(j), direction(k), direction(l)))
    return _clip(1.0 - math.fsum(turning) / (4.0 * math.pi))


def compute_fractions(alpha_complex: "AlphaComplex", balls: Optional[BallSet] = None,
                      tol: float = DEFAULT_TOLERANCE) -> Fractions:
    """
    Compute every nu and sigma attribute.

    Args:
        alpha_complex: Complex carrying the Delaunay mosaic
        balls: Ball set, defaults to the complex's own
        tol: Tolerance for triple-point existence

    Returns:
        Fractions for all intersecting pairs, all triples with triple
        points and all mosaic tetrahedra
    """
    balls = balls if balls is not None else alpha_complex.balls
    mosaic = alpha_complex.mosaic
    n = balls.n
    diagram = PowerDiagram(balls)
    neighbors = _neighbors(balls)

    edges: Dict[Edge, EdgeFractions] = {}
    for i in range(n):
        for j in neighbors[i]:
            if j <= i:
                continue
            try:
                pair = pair_geometry(balls[i], balls[j])
            except DisjointOrNested:
                continue
            others = tuple(k for k in neighbors[i] if k != j)
            edges[(i, j)] = _edge_fractions(pair, (i, j), balls, others)

    triangles: Dict[Triangle, TriangleFractions] = {}
    for (i, j) in edges:
        for k in neighbors[j]:
            if k <= j or (i, k) not in edges or (j, k) not in edges:
                continue
            try:
                triple = triple_geometry(balls[i], balls[j], balls[k], tol)
            except (NoTriplePoint, DisjointOrNested):
                continue
            others = tuple(l for l in neighbors[i] if l not in (j, k))
            triangles[(i, j, k)] = _triangle_fractions(triple, (i, j, k), balls, diagram, others)

    for key, edge in edges.items():
        _complete_edge(edge, balls, [t for tk, t in triangles.items()
                                     if key[0] in tk and key[1] in tk])

    tetrahedra = {tet: (1.0 if mosaic.orthopowers[tet] < 0.0 else 0.0)
                  for tet in mosaic.tetrahedra}
    alpha_tets = [tet for tet, nu in tetrahedra.items() if nu > 0.0]

    sigma = np.zeros(n)
    nu = np.zeros(n)
    for i in range(n):
        incident = [e for key, e in edges.items() if i in key]
        sigma[i] = _sphere_fraction(i, balls, incident, triangles,
                                    [t for t in alpha_tets if i in t],
                                    diagram, neighbors[i])
        r_i = balls.radii[i]
        volume_terms = [sigma[i]]
        for e in incident:
            xi = e.pair.xi_i if e.vertices[0] == i else e.pair.xi_j
            volume_terms.append(xi * e.pair.r_ij ** 2 * e.nu / (4.0 * r_i ** 3))
        nu[i] = _clip(math.fsum(volume_terms))

    logger.debug(f"Fractions: {len(edges)} circles, {len(triangles)} point pairs, "
                 f"{len(alpha_tets)} alpha tetrahedra")
    return Fractions(sigma, nu, edges, triangles, tetrahedra, neighbors)
