"""
Analytic gradients of the weighted volume, area and mean curvature,
checked against closed forms and central differences.
"""

import math

import numpy as np
import pytest

from src.complex import BallSet, build_alpha_complex
from src.degeneracy import check_general_position
from src.gradients import (
    area_gradient,
    circle_fraction_coefficients,
    energy_gradient,
    mean_curvature_gradient,
    pair_scalar_primes,
    random_momentum,
    retarget_motion,
    rigid_momentum,
    sigma_i_prime,
    sigma_ij_prime,
    volume_gradient,
)
from src.measures import (
    MorphometricCoefficients,
    weighted_area,
    weighted_mean_curvature,
    weighted_volume,
)
from src.oracles import ComplexMeasure, FDConfig, fd_directional
from src.utils.exceptions import CrossedDegeneracy, DegenerateState

PI = math.pi
SQRT3 = math.sqrt(3.0)

PAIRS = [
    ("volume", weighted_volume, volume_gradient),
    ("area", weighted_area, area_gradient),
    ("mean", weighted_mean_curvature, mean_curvature_gradient),
]


class TestTwoBalls:
    """Unit balls at distance 1; every gradient points along the center line."""

    @pytest.mark.parametrize("gradient, rate", [
        (volume_gradient, 3.0 * PI / 4.0),
        (area_gradient, 2.0 * PI),
        (mean_curvature_gradient, 2.0 * PI - PI * (1.0 - PI / (6.0 * SQRT3))),
    ])
    def test_blocks(self, two_balls, gradient, rate):
        field = gradient(build_alpha_complex(two_balls))
        np.testing.assert_allclose(field.block(0), [-rate, 0.0, 0.0], atol=1e-12)
        np.testing.assert_allclose(field.block(1), [rate, 0.0, 0.0], atol=1e-12)

    def test_mean_rate_value(self, two_balls):
        field = mean_curvature_gradient(build_alpha_complex(two_balls))
        assert field.block(1)[0] == pytest.approx(4.0913, abs=1e-4)

    def test_full_circle_has_no_fraction_part(self, two_balls):
        field = mean_curvature_gradient(build_alpha_complex(two_balls))
        assert field.has_decomposition
        np.testing.assert_allclose(field.s, 0.0)
        np.testing.assert_allclose(field.g, field.p + field.q)

    def test_fraction_rates(self, two_balls):
        complex_ = build_alpha_complex(two_balls)
        momentum = np.array([-1.0, 0.0, 0.0, 0.0, 0.0, 0.0])
        np.testing.assert_allclose(sigma_i_prime(complex_, None, momentum), [0.25, 0.25])
        r_rate, phi_rate = pair_scalar_primes(complex_, None, momentum)[(0, 1)]
        assert r_rate == pytest.approx(-1.0 / (2.0 * SQRT3))
        assert phi_rate == pytest.approx(2.0 / SQRT3)
        assert sigma_ij_prime(complex_, None, momentum)[(0, 1)] == 0.0


def _weighted_state(seed):
    """Random weighted balls, 10 to 20 of them at roughly constant density."""
    rng = np.random.default_rng(seed)
    n = 10 + seed % 11
    side = 4.0 * (n / 8.0) ** (1.0 / 3.0)
    balls = BallSet.from_arrays(rng.uniform(0.0, side, (n, 3)),
                                rng.uniform(0.8, 1.6, n),
                                rng.uniform(-1.0, 2.0, n))
    return balls, rng


def _general_position(balls):
    try:
        complex_ = build_alpha_complex(balls)
    except DegenerateState:
        return None
    if check_general_position(complex_, tol=1e-3):
        return None
    return complex_


@pytest.mark.parametrize("seed", range(100))
def test_matches_central_differences(seed):
    balls, rng = _weighted_state(seed)
    complex_ = _general_position(balls)
    if complex_ is None:
        pytest.skip("configuration within 1e-3 of a degeneracy")
    t = random_momentum(balls.n, rng)
    cfg = FDConfig()
    for name, measure, gradient in PAIRS:
        analytic = gradient(complex_).directional(t)
        try:
            numeric = fd_directional(ComplexMeasure(measure, name=name), balls, t, cfg)
        except CrossedDegeneracy:
            pytest.skip("difference step crosses a degeneracy")
        assert cfg.agrees(analytic, numeric), f"{name}: {analytic} vs {numeric}"


@pytest.mark.parametrize("name, measure, gradient", PAIRS)
def test_fifteen_balls_twenty_momenta(generic_factory, name, measure, gradient):
    balls = generic_factory(15, n=15, side=4.0 * (15 / 8.0) ** (1.0 / 3.0))
    field = gradient(build_alpha_complex(balls))
    rng = np.random.default_rng(115)
    cfg = FDConfig()
    for _ in range(20):
        t = random_momentum(balls.n, rng)
        numeric = fd_directional(ComplexMeasure(measure, name=name), balls, t, cfg)
        analytic = field.directional(t)
        assert cfg.agrees(analytic, numeric), f"{name}: {analytic} vs {numeric}"


@pytest.mark.parametrize("name, measure, gradient", PAIRS)
def test_three_balls_with_corners(three_balls, name, measure, gradient):
    balls = three_balls.with_weights([1.0, -0.5, 2.0])
    field = gradient(build_alpha_complex(balls))
    t = random_momentum(3, np.random.default_rng(5))
    numeric = fd_directional(ComplexMeasure(measure, name=name), balls, t)
    assert FDConfig().agrees(field.directional(t), numeric)


@pytest.mark.parametrize("gradient", [volume_gradient, area_gradient, mean_curvature_gradient])
def test_rigid_motions_cost_nothing(generic_balls, gradient):
    field = gradient(build_alpha_complex(generic_balls))
    scale = max(1.0, field.norm())
    for axis in np.eye(3):
        assert field.directional(rigid_momentum(generic_balls, linear=axis)) == pytest.approx(
            0.0, abs=1e-9 * scale)
        assert field.directional(rigid_momentum(generic_balls, angular=axis)) == pytest.approx(
            0.0, abs=1e-9 * scale)


class TestFractionRates:
    def test_sphere_fractions_match_differences(self, generic_balls):
        complex_ = build_alpha_complex(generic_balls)
        t = random_momentum(generic_balls.n, np.random.default_rng(11))
        h = 1e-6
        plus = build_alpha_complex(generic_balls.moved(t, h)).fractions.vertex_sigma
        minus = build_alpha_complex(generic_balls.moved(t, -h)).fractions.vertex_sigma
        np.testing.assert_allclose(sigma_i_prime(complex_, None, t), (plus - minus) / (2 * h),
                                   atol=1e-6)

    def test_circle_fractions_match_differences(self, three_balls):
        complex_ = build_alpha_complex(three_balls)
        t = random_momentum(3, np.random.default_rng(12))
        h = 1e-6
        plus = build_alpha_complex(three_balls.moved(t, h)).fractions.edges
        minus = build_alpha_complex(three_balls.moved(t, -h)).fractions.edges
        for key, rate in sigma_ij_prime(complex_, None, t).items():
            numeric = (plus[key].sigma - minus[key].sigma) / (2 * h)
            assert rate == pytest.approx(numeric, abs=1e-6)

    def test_coefficients_reproduce_rates(self, three_balls):
        complex_ = build_alpha_complex(three_balls)
        t = random_momentum(3, np.random.default_rng(13))
        blocks = t.reshape(3, 3)
        rates = sigma_ij_prime(complex_, None, t)
        for key, edge in complex_.fractions.edges.items():
            coef = circle_fraction_coefficients(edge, three_balls, complex_.tolerance)
            linear = sum(float(vector @ blocks[m]) for m, vector in coef.items())
            assert linear == pytest.approx(rates[key], abs=1e-12)

    def test_retargeted_motion_fixes_the_pair(self, three_balls):
        complex_ = build_alpha_complex(three_balls)
        edge = complex_.fractions.edges[(0, 1)]
        t = random_momentum(3, np.random.default_rng(14))
        motion = retarget_motion(edge.pair, 0, 1, three_balls, t)
        np.testing.assert_allclose(motion.V_ij, t.reshape(3, 3)[1] - t.reshape(3, 3)[0])
        # the axis of the pair only stretches in the retargeted frame
        relative = motion.T(0) - motion.T(1)
        np.testing.assert_allclose(np.cross(relative, edge.pair.u_ij), 0.0, atol=1e-12)


class TestEnergyGradient:
    def test_linear_combination(self, generic_balls):
        complex_ = build_alpha_complex(generic_balls)
        mu = MorphometricCoefficients(0.3, -1.2, 0.8, 0.0)
        expected = (0.3 * volume_gradient(complex_).g - 1.2 * area_gradient(complex_).g
                    + 0.8 * mean_curvature_gradient(complex_).g)
        np.testing.assert_allclose(energy_gradient(complex_, mu=mu).g, expected, atol=1e-10)

    def test_gauss_term_needs_equal_weights(self, generic_balls):
        complex_ = build_alpha_complex(generic_balls)
        with pytest.raises(ValueError):
            energy_gradient(complex_, mu=MorphometricCoefficients(0.0, 0.0, 0.0, 1.0))

    def test_gauss_term_is_free_for_equal_weights(self, two_balls):
        complex_ = build_alpha_complex(two_balls)
        field = energy_gradient(complex_, mu=MorphometricCoefficients(0.0, 1.0, 0.0, 5.0))
        np.testing.assert_allclose(field.g, area_gradient(complex_).g)


class TestDegenerateGradient:
    def test_near_tangent_pair(self):
        balls = BallSet.from_arrays([[0, 0, 0], [1.9999999999999, 0, 0]], 1.0)
        complex_ = build_alpha_complex(balls)
        with pytest.raises(DegenerateState) as info:
            mean_curvature_gradient(complex_)
        assert info.value.case_label == "C1"
        assert info.value.involved == (0, 1)
        assert info.value.report is not None
        assert info.value.report.case_label == "C1"

    def test_volume_and_area_stay_defined(self):
        balls = BallSet.from_arrays([[0, 0, 0], [1.9999999999999, 0, 0]], 1.0)
        complex_ = build_alpha_complex(balls)
        assert np.all(np.isfinite(volume_gradient(complex_).g))
        assert np.all(np.isfinite(area_gradient(complex_).g))


def test_field_frame(two_balls):
    field = mean_curvature_gradient(build_alpha_complex(two_balls))
    frame = field.to_frame()
    assert list(frame.columns[:3]) == ["gx", "gy", "gz"]
    assert {"px", "qy", "sz"} <= set(frame.columns)
    assert len(frame) == 2
