"""
Alpha complex of a ball set: the nerve of the clipped balls B_i ∩ Vor_i,
selected from the Delaunay mosaic by the nu > 0 rule.
"""

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, FrozenSet, Optional, Tuple

import numpy as np
import pandas as pd

from .ball_set import BallSet
from .fractions import Fractions, compute_fractions
from .triangulation import RegularTriangulation, build_regular_triangulation
from ..utils.config import DEFAULT_TOLERANCE

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class Simplex:
    """Sorted tuple of 1 to 4 ball indices."""
    vertices: Tuple[int, ...]

    def __post_init__(self):
        vertices = tuple(sorted(int(v) for v in self.vertices))
        if not 1 <= len(vertices) <= 4 or len(set(vertices)) != len(vertices):
            raise ValueError(f"Invalid simplex {self.vertices}")
        object.__setattr__(self, "vertices", vertices)

    @property
    def dim(self) -> int:
        return len(self.vertices) - 1

    def faces(self):
        """All proper nonempty faces."""
        for size in range(1, len(self.vertices)):
            for face in combinations(self.vertices, size):
                yield Simplex(face)

    def __str__(self) -> str:
        return "(" + ",".join(str(v) for v in self.vertices) + ")"


@dataclass(frozen=True, eq=False)
class AlphaComplex:
    """
    Alpha complex at the scale of the given radii.

    Attributes:
        balls: The ball set
        mosaic: Delaunay mosaic the complex was selected from
        simplices: Member simplices, closed under faces
        fractions: nu and sigma attributes
        boundary: Members with sigma > 0
        tolerance: Tolerance used for the construction
    """
    balls: BallSet
    mosaic: RegularTriangulation
    simplices: FrozenSet[Simplex]
    fractions: Fractions
    boundary: FrozenSet[Simplex] = field(default_factory=frozenset)
    tolerance: float = DEFAULT_TOLERANCE

    def __contains__(self, vertices) -> bool:
        if not isinstance(vertices, Simplex):
            vertices = Simplex(tuple(vertices))
        return vertices in self.simplices

    def of_dim(self, dim: int) -> Tuple[Simplex, ...]:
        return tuple(sorted(s for s in self.simplices if s.dim == dim))

    def counts(self) -> Dict[int, int]:
        """Number of member simplices per dimension 0..3."""
        out = {d: 0 for d in range(4)}
        for s in self.simplices:
            out[s.dim] += 1
        return out

    def euler_characteristic(self) -> int:
        c = self.counts()
        return c[0] - c[1] + c[2] - c[3]

    def key(self) -> FrozenSet[Tuple[int, ...]]:
        """Hashable identity of the member set."""
        return frozenset(s.vertices for s in self.simplices)

    def is_boundary(self, vertices) -> bool:
        return Simplex(tuple(vertices)) in self.boundary

    def nu(self, vertices) -> float:
        """Volume-type fraction of the simplex (0 when not computed)."""
        vertices = tuple(sorted(vertices))
        f = self.fractions
        if len(vertices) == 1:
            return float(f.vertex_nu[vertices[0]])
        if len(vertices) == 2:
            edge = f.edges.get(vertices)
            return edge.nu if edge is not None else 0.0
        if len(vertices) == 3:
            tri = f.triangles.get(vertices)
            return tri.nu if tri is not None else 0.0
        return f.tetrahedra.get(vertices, 0.0)

    def sigma(self, vertices) -> float:
        """Boundary-type fraction of the simplex (0 for tetrahedra)."""
        vertices = tuple(sorted(vertices))
        f = self.fractions
        if len(vertices) == 1:
            return float(f.vertex_sigma[vertices[0]])
        if len(vertices) == 2:
            edge = f.edges.get(vertices)
            return edge.sigma if edge is not None else 0.0
        if len(vertices) == 3:
            tri = f.triangles.get(vertices)
            return tri.sigma if tri is not None else 0.0
        return 0.0

    def vertex_table(self) -> pd.DataFrame:
        """Per-ball fractions with membership and boundary flags."""
        n = self.balls.n
        return pd.DataFrame({
            "index": np.arange(n),
            "radius": self.balls.radii,
            "weight": self.balls.weights,
            "nu": self.fractions.vertex_nu,
            "sigma": self.fractions.vertex_sigma,
            "in_complex": [Simplex((i,)) in self.simplices for i in range(n)],
            "boundary": [Simplex((i,)) in self.boundary for i in range(n)],
        }).set_index("index")


def _select(fractions: Fractions, n: int) -> FrozenSet[Simplex]:
    members = set()
    members.update(Simplex((i,)) for i in range(n) if fractions.vertex_nu[i] > 0.0)
    members.update(Simplex(k) for k, e in fractions.edges.items() if e.nu > 0.0)
    members.update(Simplex(k) for k, t in fractions.triangles.items() if t.nu > 0.0)
    members.update(Simplex(k) for k, nu in fractions.tetrahedra.items() if nu > 0.0)
    closed = set(members)
    for s in members:
        closed.update(s.faces())
    if len(closed) != len(members):
        logger.warning(f"Face closure added {len(closed) - len(members)} simplices")
    return frozenset(closed)


def _boundary(fractions: Fractions, n: int) -> FrozenSet[Simplex]:
    out = {Simplex((i,)) for i in range(n) if fractions.vertex_sigma[i] > 0.0}
    out.update(Simplex(k) for k, e in fractions.edges.items() if e.sigma > 0.0)
    out.update(Simplex(k) for k, t in fractions.triangles.items() if t.sigma > 0.0)
    return frozenset(out)


def build_alpha_complex(balls: BallSet, tol: float = DEFAULT_TOLERANCE,
                        mosaic: Optional[RegularTriangulation] = None) -> AlphaComplex:
    """
    Build the alpha complex and populate every fraction.

    Args:
        balls: The ball set
        tol: Degeneracy tolerance
        mosaic: Precomputed Delaunay mosaic of the same set

    Returns:
        AlphaComplex

    Raises:
        DegenerateState: the Delaunay mosaic cannot be built
    """
    if mosaic is None:
        mosaic = build_regular_triangulation(balls, tol)
    shell = AlphaComplex(balls, mosaic, frozenset(), None, frozenset(), tol)
    fractions = compute_fractions(shell, balls, tol)
    simplices = _select(fractions, balls.n)
    complex_ = AlphaComplex(balls, mosaic, simplices, fractions,
                            _boundary(fractions, balls.n), tol)
    counts = complex_.counts()
    logger.info(f"Alpha complex: {counts[0]} vertices, {counts[1]} edges, "
                f"{counts[2]} triangles, {counts[3]} tetrahedra")
    return complex_
