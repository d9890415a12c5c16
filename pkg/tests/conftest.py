"""
Shared fixtures: canonical ball sets, a seeded generator of generic
configurations, single-event trajectories and flip constructions.
"""

import math
import os
import sys

import numpy as np
import pytest

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from src.cli.ball_file import format_balls  # noqa: E402
from src.complex import BallSet, build_alpha_complex  # noqa: E402
from src.degeneracy import check_general_position  # noqa: E402
from src.utils.exceptions import DegenerateState  # noqa: E402

SQRT3 = math.sqrt(3.0)
# Proximity below which a random configuration is rejected as non-generic.
GENERIC_MARGIN = 1e-3


def _ring(count, distance, ball_radius=1.0):
    """Balls on a circle with consecutive centers ``distance`` apart."""
    R = 0.5 * distance / math.sin(math.pi / count)
    angles = 2.0 * math.pi * np.arange(count) / count
    centers = np.column_stack([R * np.cos(angles), R * np.sin(angles), np.zeros(count)])
    return BallSet.from_arrays(centers, ball_radius)


def _triangle(circumradius):
    angles = np.radians([90.0, 210.0, 330.0])
    return np.column_stack([circumradius * np.cos(angles),
                            circumradius * np.sin(angles),
                            np.zeros(3)])


REGULAR_TET = np.array([[1.0, 1.0, 1.0], [1.0, -1.0, -1.0],
                        [-1.0, 1.0, -1.0], [-1.0, -1.0, 1.0]]) / SQRT3


def make_generic(seed, n=8, side=4.0, radii=(0.8, 1.6), weights=(-1.0, 2.0)):
    """Random overlapping balls at least GENERIC_MARGIN away from every event."""
    rng = np.random.default_rng(seed)
    for _ in range(100):
        balls = BallSet.from_arrays(rng.uniform(0.0, side, (n, 3)),
                                    rng.uniform(*radii, n),
                                    rng.uniform(*weights, n))
        try:
            complex_ = build_alpha_complex(balls)
        except DegenerateState:
            continue
        if not check_general_position(complex_, tol=GENERIC_MARGIN):
            return balls
    raise RuntimeError(f"No generic configuration found for seed {seed}")


# Each trajectory maps eps to a state; eps = 0 is the event and eps > 0 is
# the side where the event's simplices are present.

def _c1(eps):
    return BallSet.from_arrays([[0.0, 0.0, 0.0], [2.0 - eps, 0.0, 0.0]], 1.0)


def _c2(eps):
    return BallSet.from_arrays(_triangle(1.0 - eps), 1.0)


def _c3(eps):
    return BallSet.from_arrays(REGULAR_TET * (1.0 - eps), 1.0)


def _n01(eps):
    return BallSet.from_arrays([[0.0, 0.0, 0.0], [1.0 + eps, 0.0, 0.0]], [2.0, 1.0])


def _n02(eps):
    c = 0.5 * (SQRT3 - 1.0) + eps
    return BallSet.from_arrays([[0.5, 0.0, 0.0], [-0.5, 0.0, 0.0], [0.0, c, 0.0]],
                               [1.0, 1.0, 0.5])


def _n12(eps):
    return BallSet.from_arrays([[0.8, 0.0, 0.0], [-0.8, 0.0, 0.0], [0.0, -1.0 - eps, 0.0]],
                               [1.0, 1.0, 1.6])


def _n03(eps):
    centers = np.vstack([_triangle(0.8), [0.0, 0.0, 0.3 + eps]])
    return BallSet.from_arrays(centers, [1.0, 1.0, 1.0, 0.3])


def _n13(eps):
    c = 0.5 * (SQRT3 - 1.0) + eps
    e = math.sqrt(0.39)
    centers = [[0.0, c, e], [0.0, c, -e], [0.5, 0.0, 0.0], [-0.5, 0.0, 0.0]]
    return BallSet.from_arrays(centers, [0.8, 0.8, 1.0, 1.0])


def _n23(eps):
    centers = np.vstack([_triangle(0.8), [0.0, 0.0, -1.0 - eps]])
    return BallSet.from_arrays(centers, [1.0, 1.0, 1.0, 1.6])


TRAJECTORIES = {
    "C1": (_c1, (0, 1)),
    "C2": (_c2, (0, 1, 2)),
    "C3": (_c3, (0, 1, 2, 3)),
    "N01": (_n01, (0, 1)),
    "N02": (_n02, (0, 1, 2)),
    "N12": (_n12, (0, 1, 2)),
    "N03": (_n03, (0, 1, 2, 3)),
    "N13": (_n13, (0, 1, 2, 3)),
    "N23": (_n23, (0, 1, 2, 3)),
}


def _flip_23(s):
    """Bipyramid; the apex pair is cospherical with the equator at s = 0."""
    centers = np.vstack([_triangle(1.0), [0.0, 0.0, 1.0], [0.0, 0.0, -1.0 - s]])
    return BallSet.from_arrays(centers, 1.1)


def _flip_14(s):
    """Small ball near the center of a tetrahedron, redundant for s > 0."""
    reach = math.sqrt(1.0 - 0.98 ** 2 + 0.1 ** 2) + s
    centers = np.vstack([REGULAR_TET, -reach * REGULAR_TET[0]])
    return BallSet.from_arrays(centers, [0.98, 0.98, 0.98, 0.98, 0.1])


@pytest.fixture
def single_ball():
    return BallSet.from_arrays([[0.3, -0.2, 1.0]], 1.3, 0.7)


@pytest.fixture
def two_balls():
    return BallSet.from_arrays([[0.0, 0.0, 0.0], [1.0, 0.0, 0.0]], 1.0)


@pytest.fixture
def three_balls():
    """Unit balls on an equilateral triangle of side 1."""
    return BallSet.from_arrays(_triangle(1.0 / SQRT3), 1.0)


@pytest.fixture
def chain_balls():
    """Three balls in a row; the outer two are disjoint."""
    return BallSet.from_arrays([[0.0, 0.0, 0.0], [1.5, 0.0, 0.0], [3.0, 0.0, 0.0]],
                               [1.0, 1.2, 0.9])


@pytest.fixture
def ring_balls():
    """Eight unit balls forming a torus."""
    return _ring(8, 1.2)


@pytest.fixture
def generic_balls():
    return make_generic(7)


@pytest.fixture
def generic_factory():
    return make_generic


@pytest.fixture
def trajectories():
    return TRAJECTORIES


@pytest.fixture
def flip_23():
    return _flip_23


@pytest.fixture
def flip_14():
    return _flip_14


@pytest.fixture
def ball_file(tmp_path):
    """Write ball records to a file and return its path."""
    def write(balls, name="balls.txt"):
        path = tmp_path / name
        path.write_text(format_balls(balls))
        return str(path)
    return write
