"""
Independent verification backends and the check registry.
"""

import math

import numpy as np
import pytest

from src.complex import BallSet, build_alpha_complex
from src.measures import weighted_area, weighted_mean_curvature, weighted_volume
from src.oracles import (
    BaseCheck,
    CheckContext,
    CheckFactory,
    CheckResult,
    ComplexMeasure,
    FDConfig,
    FiniteDifferenceCheck,
    GaussBonnetCheck,
    MCConfig,
    SteinerCheck,
    compare_fractions,
    crevice_correction,
    fd_directional,
    gauss_bonnet,
    mc_circle_fractions,
    mc_fractions,
    mc_union_volume,
    steiner_fit,
)
from src.utils.exceptions import CrossedDegeneracy, DegenerateState, TopologyChange

PI = math.pi
SMALL_MC = MCConfig(samples=20_000, seed=3, shards=4)


class TestFiniteDifferences:
    def test_config_validation(self):
        with pytest.raises(ValueError):
            FDConfig(step=0.0)
        with pytest.raises(ValueError):
            FDConfig(scheme="forward")

    def test_agrees(self):
        cfg = FDConfig()
        assert cfg.agrees(1.0, 1.0 + 1e-7)
        assert not cfg.agrees(1.0, 1.0 + 1e-4)
        assert cfg.agrees(0.0, 5e-9)

    def test_two_ball_distance_rate(self, two_balls):
        t = np.array([-1.0, 0.0, 0.0, 0.0, 0.0, 0.0])
        rate = fd_directional(ComplexMeasure(weighted_volume), two_balls, t)
        assert rate == pytest.approx(3.0 * PI / 4.0, rel=1e-8)

    def test_plain_callable(self, two_balls):
        t = np.array([-1.0, 0.0, 0.0, 0.0, 0.0, 0.0])
        rate = fd_directional(lambda balls: weighted_area(build_alpha_complex(balls)), two_balls, t)
        assert rate == pytest.approx(2.0 * PI, rel=1e-8)

    def test_crossing_is_refused(self, trajectories):
        trajectory, _ = trajectories["C1"]
        t = np.array([0.0, 0.0, 0.0, -1.0, 0.0, 0.0])
        with pytest.raises(CrossedDegeneracy):
            fd_directional(ComplexMeasure(weighted_mean_curvature), trajectory(0.0), t,
                           FDConfig(step=1e-3))


class TestMonteCarlo:
    def test_config(self):
        assert sum(MCConfig(samples=10, shards=4).shard_sizes()) == 10
        assert len(MCConfig(samples=3, shards=8).shard_sizes()) == 3
        with pytest.raises(ValueError):
            MCConfig(samples=0)

    def test_fractions_of_two_balls(self, two_balls):
        table = mc_fractions(two_balls, SMALL_MC)
        np.testing.assert_allclose(table["sigma"], 0.75, atol=5 * 0.0031 + 1e-3)
        np.testing.assert_allclose(table["nu"], 0.84375, atol=5 * 0.0026 + 1e-3)

    def test_deterministic_and_worker_independent(self, three_balls):
        serial = mc_fractions(three_balls, SMALL_MC)
        again = mc_fractions(three_balls, SMALL_MC)
        parallel = mc_fractions(three_balls, MCConfig(samples=20_000, seed=3, shards=4, n_jobs=2))
        np.testing.assert_array_equal(serial.values, again.values)
        np.testing.assert_array_equal(serial.values, parallel.values)

    def test_compare_with_exact(self, generic_balls):
        complex_ = build_alpha_complex(generic_balls)
        table = compare_fractions(complex_, mc_fractions(generic_balls, SMALL_MC),
                                  SMALL_MC.samples, sigmas=5)
        assert table["sigma_ok"].all(), table.to_string()
        assert table["nu_ok"].all(), table.to_string()

    def test_circle_fractions(self, three_balls):
        complex_ = build_alpha_complex(three_balls)
        table = mc_circle_fractions(complex_, SMALL_MC)
        for row in table.itertuples():
            exact = complex_.sigma((row.i, row.j))
            assert abs(row.sigma - exact) <= 5 * row.sigma_err + 3.0 / SMALL_MC.samples

    def test_union_volume(self, chain_balls):
        estimate, error = mc_union_volume(chain_balls, MCConfig(samples=50_000, seed=1))
        exact = weighted_volume(build_alpha_complex(chain_balls))
        assert abs(estimate - exact) <= 5 * error


class TestSteiner:
    def test_two_balls(self, two_balls):
        fit = steiner_fit(two_balls)
        assert fit.volume == pytest.approx(9.0 * PI / 4.0, rel=1e-9)
        assert fit.area_estimate == pytest.approx(6.0 * PI, rel=1e-6)
        assert fit.c2 == pytest.approx(5.0 * PI, rel=1e-4)
        assert fit.mean_estimate == pytest.approx(16.00045, abs=1e-3)
        assert fit.residual < 1e-9

    def test_chain(self, chain_balls):
        complex_ = build_alpha_complex(chain_balls)
        fit = steiner_fit(chain_balls)
        assert fit.area_estimate == pytest.approx(weighted_area(complex_), rel=1e-4)
        assert fit.mean_estimate == pytest.approx(weighted_mean_curvature(complex_), rel=1e-3)

    def test_weights_are_ignored(self, two_balls):
        weighted = steiner_fit(two_balls.with_weights([3.0, -1.0]))
        assert weighted.area_estimate == pytest.approx(steiner_fit(two_balls).area_estimate)

    def test_crevice_correction(self, two_balls):
        half = PI / 6.0
        expected = 2.0 * PI * (math.sqrt(3.0) / 2.0) * (math.tan(half) - half)
        assert crevice_correction(build_alpha_complex(two_balls)) == pytest.approx(expected)

    def test_topology_change(self):
        balls = BallSet.from_arrays([[0, 0, 0], [2.002, 0, 0]], 1.0)
        with pytest.raises(TopologyChange):
            steiner_fit(balls)


class TestGaussBonnet:
    def test_three_balls(self, three_balls):
        result = gauss_bonnet(build_alpha_complex(three_balls))
        assert result.value == pytest.approx(4.0 * PI)
        assert result.complex_euler_characteristic == 1
        assert result.corner_count == 2
        assert result.arc_count == 3
        assert result.consistent()

    def test_three_balls_counts(self, three_balls):
        result = gauss_bonnet(build_alpha_complex(three_balls))
        assert result.euler_characteristic == 2
        assert result.patch_count == 3
        assert result.loop_count == 3
        assert result.triangle_corners == 2

    def test_single_ball(self, single_ball):
        result = gauss_bonnet(build_alpha_complex(single_ball))
        assert result.euler_characteristic == 2
        assert (result.patch_count, result.loop_count, result.arc_count) == (1, 0, 0)
        assert result.consistent()

    def test_two_balls(self, two_balls):
        result = gauss_bonnet(build_alpha_complex(two_balls))
        assert result.euler_characteristic == 2
        assert result.full_circles == result.arc_count == 1
        assert result.patch_count == 2
        assert result.loop_count == 2

    def test_nested_ball_has_no_patch(self):
        balls = BallSet.from_arrays([[0, 0, 0], [-0.2, 0, 0], [1.5, 0, 0]], [1.0, 0.4, 1.0])
        result = gauss_bonnet(build_alpha_complex(balls))
        assert result.euler_characteristic == 2
        assert result.boundary_balls == 2
        assert result.consistent()

    def test_ring(self, ring_balls):
        result = gauss_bonnet(build_alpha_complex(ring_balls))
        assert result.euler_characteristic == 0
        assert result.full_circles == 8
        assert result.patch_count == 8
        assert result.loop_count == 16
        assert result.value == pytest.approx(0.0)
        assert result.consistent()

    @pytest.mark.parametrize("seed", range(6))
    def test_counts_agree_with_complex(self, generic_factory, seed):
        result = gauss_bonnet(build_alpha_complex(generic_factory(seed)))
        assert result.agrees_with_complex()
        assert result.corner_count == result.triangle_corners
        assert result.consistent()

    def test_counts_do_not_read_the_complex(self, ring_balls, monkeypatch, caplog):
        complex_ = build_alpha_complex(ring_balls)
        monkeypatch.setattr(type(complex_), "euler_characteristic", lambda self: 1)
        result = gauss_bonnet(complex_)
        assert result.euler_characteristic == 0
        assert not result.agrees_with_complex()
        assert not result.consistent()
        assert "disagrees" in caplog.text

    def test_degenerate(self, trajectories):
        trajectory, _ = trajectories["C2"]
        with pytest.raises(DegenerateState):
            gauss_bonnet(build_alpha_complex(trajectory(-1e-7)), tol=1e-5)


class TestChecks:
    def test_finite_difference_check(self, generic_balls):
        result = FiniteDifferenceCheck(CheckContext(seed=1)).run(build_alpha_complex(generic_balls))
        assert result.passed and not result.skipped
        assert len(result.details["comparisons"]) == 3 * 3

    def test_finite_difference_skips_degenerate(self):
        balls = BallSet.from_arrays([[0, 0, 0], [1.9999999999999, 0, 0]], 1.0)
        result = FiniteDifferenceCheck().run(build_alpha_complex(balls))
        assert result.skipped and not result.passed
        assert result.details["case_label"] == "C1"

    def test_steiner_check(self, two_balls):
        result = SteinerCheck().run(build_alpha_complex(two_balls))
        assert result.passed
        assert result.details["mean_error"] < 1e-3

    def test_steiner_check_skips(self):
        balls = BallSet.from_arrays([[0, 0, 0], [2.002, 0, 0]], 1.0)
        result = SteinerCheck().run(build_alpha_complex(balls))
        assert result.skipped
        assert result.details["marker"] == "TopologyChange"

    def test_gauss_bonnet_check(self, generic_balls):
        result = GaussBonnetCheck().run(build_alpha_complex(generic_balls))
        assert result.passed
        assert result.details["counts_consistent"]

    def test_result_as_dict(self):
        record = CheckResult("x", True, details={"a": 1}).as_dict()
        assert record == {"name": "x", "passed": True, "skipped": False, "details": {"a": 1}}


class TestCheckFactory:
    def test_supported(self):
        factory = CheckFactory()
        assert factory.get_supported_checks() == [
            "finite_difference", "monte_carlo", "steiner", "gauss_bonnet"]
        assert isinstance(factory.get_check("Steiner"), SteinerCheck)
        assert factory.get_check("nope") is None

    def test_info(self):
        info = CheckFactory().get_check_info()
        assert info["total_checks"] == 4
        assert info["checks"]["gauss_bonnet"]["class_name"] == "GaussBonnetCheck"
        assert info["checks"]["steiner"]["description"]

    def test_register(self, two_balls):
        class AlwaysPasses(BaseCheck):
            """Trivial check."""

            def get_check_name(self):
                return "always"

            def run(self, complex_):
                return CheckResult(self.get_check_name(), True)

        factory = CheckFactory()
        factory.register_check("always", AlwaysPasses)
        results = factory.run_all(build_alpha_complex(two_balls), CheckContext(), ["always", "missing"])
        assert [r.name for r in results] == ["always"]
        with pytest.raises(ValueError):
            factory.register_check("bad", dict)

    def test_run_all(self, two_balls):
        context = CheckContext(samples=5_000, seed=2)
        results = CheckFactory().run_all(build_alpha_complex(two_balls), context)
        assert [r.name for r in results] == [
            "finite_difference", "monte_carlo", "steiner", "gauss_bonnet"]
        by_name = {r.name: r for r in results}
        assert by_name["finite_difference"].passed
        assert by_name["gauss_bonnet"].passed
