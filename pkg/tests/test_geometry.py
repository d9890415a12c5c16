"""
Closed-form pair and triple geometry.
"""

import math

import numpy as np
import pytest

from src.geometry import (
    Ball,
    arc_angle_derivative,
    cap_area_fraction,
    derivatives_of,
    lambda_ij,
    pair_derivatives,
    pair_geometry,
    solid_angle,
    spherical_excess,
    tangent_at_corner,
    triple_geometry,
)
from src.utils.exceptions import (
    DegenerateFrame,
    DisjointOrNested,
    NoTriplePoint,
    OutOfRange,
    TangentialContact,
)

SQRT3 = math.sqrt(3.0)


def unit(x, y=0.0, z=0.0, r=1.0):
    return Ball(np.array([x, y, z]), r)


class TestBall:
    def test_rejects_bad_radius(self):
        with pytest.raises(ValueError):
            Ball(np.zeros(3), 0.0)
        with pytest.raises(ValueError):
            Ball(np.zeros(3), -1.0)

    def test_rejects_non_finite(self):
        with pytest.raises(ValueError):
            Ball(np.array([0.0, math.nan, 0.0]), 1.0)
        with pytest.raises(ValueError):
            Ball(np.zeros(3), 1.0, math.inf)

    def test_power_and_row(self):
        ball = Ball.from_row([1.0, 0.0, 0.0, 2.0, 0.5])
        assert ball.weight == 0.5
        assert ball.power(np.array([1.0, 0.0, 0.0])) == pytest.approx(-4.0)
        assert ball.power(np.array([4.0, 0.0, 0.0])) == pytest.approx(5.0)
        assert ball.contains(np.array([2.5, 0.0, 0.0]))


class TestPairGeometry:
    def test_unit_pair(self):
        pair = pair_geometry(unit(0.0), unit(1.0))
        assert pair.dist == pytest.approx(1.0)
        assert pair.xi_i == pytest.approx(0.5)
        assert pair.xi_j == pytest.approx(0.5)
        assert pair.r_ij == pytest.approx(SQRT3 / 2.0)
        assert pair.phi_ij == pytest.approx(math.pi / 3.0)
        np.testing.assert_allclose(pair.u_ij, [-1.0, 0.0, 0.0])
        np.testing.assert_allclose(pair.x_ij, [0.5, 0.0, 0.0])
        assert pair.D == pytest.approx(0.5)

    def test_unequal_radii(self):
        pair = pair_geometry(unit(0.0, r=2.0), unit(2.0, r=1.0))
        assert pair.xi_i == pytest.approx((4.0 + 4.0 - 1.0) / 4.0)
        assert pair.xi_i + pair.xi_j == pytest.approx(pair.dist)
        assert pair.r_ij ** 2 + pair.xi_i ** 2 == pytest.approx(4.0)
        assert pair.r_ij ** 2 + pair.xi_j ** 2 == pytest.approx(1.0)
        assert pair.D == pytest.approx(0.5 * (1.0 - 3.0 / 4.0))

    def test_flipped(self):
        pair = pair_geometry(unit(0.0, r=1.3), unit(1.1, 0.4))
        other = pair_geometry(unit(1.1, 0.4), unit(0.0, r=1.3))
        flipped = pair.flipped()
        assert flipped.xi_i == pytest.approx(other.xi_i)
        assert flipped.r_i == other.r_i
        np.testing.assert_allclose(flipped.u_ij, other.u_ij)
        np.testing.assert_allclose(flipped.x_ij, other.x_ij)

    @pytest.mark.parametrize("ball_j", [
        unit(2.0),            # tangent
        unit(3.0),            # disjoint
        unit(0.5, r=0.3),     # nested
    ])
    def test_no_circle(self, ball_j):
        with pytest.raises(DisjointOrNested):
            pair_geometry(unit(0.0), ball_j)

    def test_distance_derivatives(self):
        deriv = pair_derivatives(unit(0.0), unit(1.0))
        assert deriv.dr_ij_ddist == pytest.approx(-1.0 / (2.0 * SQRT3))
        assert deriv.dphi_ij_ddist == pytest.approx(2.0 / SQRT3)
        assert deriv.dsigma_i_ddist_unit == pytest.approx(0.25)

    def test_distance_derivatives_match_differences(self):
        a, r_j, d, h = unit(0.0, r=1.4), 0.9, 1.7, 1e-6
        plus = pair_geometry(a, unit(d + h, r=r_j))
        minus = pair_geometry(a, unit(d - h, r=r_j))
        deriv = derivatives_of(pair_geometry(a, unit(d, r=r_j)))
        assert deriv.dr_ij_ddist == pytest.approx((plus.r_ij - minus.r_ij) / (2 * h), rel=1e-6)
        assert deriv.dphi_ij_ddist == pytest.approx((plus.phi_ij - minus.phi_ij) / (2 * h), rel=1e-6)
        assert deriv.D == pytest.approx((plus.xi_i - minus.xi_i) / (2 * h), rel=1e-6)


def test_cap_area_fraction():
    assert cap_area_fraction(1.0, 0.5) == pytest.approx(0.75)
    assert cap_area_fraction(2.0, -2.0) == 0.0
    with pytest.raises(OutOfRange):
        cap_area_fraction(1.0, 1.5)


def test_lambda_of_unit_pair():
    pair = pair_geometry(unit(0.0), unit(1.0))
    assert lambda_ij(pair, 1.0, 1.0) == pytest.approx(1.0)


class TestTriples:
    def triangle(self, side=1.0):
        rho = side / SQRT3
        angles = np.radians([90.0, 210.0, 330.0])
        return [unit(rho * math.cos(a), rho * math.sin(a)) for a in angles]

    def test_equilateral_triple(self):
        balls = self.triangle()
        triple = triple_geometry(*balls)
        assert triple.r_ijk == pytest.approx(math.sqrt(2.0 / 3.0))
        np.testing.assert_allclose(triple.x_ijk, [0.0, 0.0, 0.0], atol=1e-12)
        for ball in balls:
            assert np.linalg.norm(triple.P_plus - ball.center) == pytest.approx(1.0)
            assert np.linalg.norm(triple.P_minus - ball.center) == pytest.approx(1.0)
        assert abs(triple.normal[2]) == pytest.approx(1.0)
        assert 0.0 < triple.phi_ijk < 2.0 * math.pi

    def test_orientation(self):
        i, j, k = self.triangle()
        triple = triple_geometry(i, j, k)
        assert np.dot(np.cross(j.center - i.center, k.center - i.center), triple.normal) > 0
        assert np.dot(triple.P_plus - triple.x_ijk, triple.normal) > 0

    def test_collinear(self):
        with pytest.raises(NoTriplePoint):
            triple_geometry(unit(0.0), unit(1.0), unit(2.0))

    def test_spheres_miss(self):
        with pytest.raises(NoTriplePoint):
            triple_geometry(*self.triangle(side=1.9))

    def test_corner_tangent(self):
        i, j, k = self.triangle()
        pair = pair_geometry(i, j)
        P = triple_geometry(i, j, k).P_plus
        tangent = tangent_at_corner(pair, P, k.center)
        assert np.linalg.norm(tangent) == pytest.approx(1.0)
        assert np.dot(tangent, pair.u_ij) == pytest.approx(0.0, abs=1e-12)
        assert np.dot(tangent, P - pair.x_ij) == pytest.approx(0.0, abs=1e-12)
        assert np.dot(k.center - P, tangent) > 0


def test_spherical_excess_octant():
    e = np.eye(3)
    assert spherical_excess(e[0], e[1], e[2]) == pytest.approx(math.pi / 2.0)
    assert solid_angle(e[0], e[1], e[2]) == pytest.approx(math.pi / 2.0)


def test_solid_angle_coplanar():
    a = np.array([1.0, 0.0, 0.0])
    b = np.array([0.0, 1.0, 0.0])
    c = np.array([1.0, 1.0, 0.0]) / math.sqrt(2.0)
    with pytest.raises(DegenerateFrame):
        solid_angle(a, b, c)


class TestArcAngleDerivative:
    def test_matches_difference(self):
        pair = pair_geometry(unit(0.0), unit(1.0))
        P = pair.x_ij + pair.r_ij * np.array([0.0, 1.0, 0.0])
        x_k = np.array([0.5, 1.6, 0.7])

        def alpha(r):
            to_k = x_k - P
            g = float((pair.x_ij - P) @ to_k)
            return math.asin(g / (r * np.linalg.norm(to_k)))

        h = 1e-6
        numeric = (alpha(pair.r_ij + h) - alpha(pair.r_ij - h)) / (2 * h)
        assert arc_angle_derivative(pair, P, x_k) == pytest.approx(numeric, rel=1e-6)

    def test_tangential(self):
        pair = pair_geometry(unit(0.0), unit(1.0))
        P = pair.x_ij + pair.r_ij * np.array([0.0, 0.0, 1.0])
        x_k = P + 2.0 * (pair.x_ij - P)
        with pytest.raises(TangentialContact):
            arc_angle_derivative(pair, P, x_k)

