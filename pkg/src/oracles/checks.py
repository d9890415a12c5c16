"""
Concrete oracle checks: finite differences, Monte-Carlo fractions,
the Steiner fit and Gauss-Bonnet.
"""

import logging

import numpy as np

from .base_check import BaseCheck, CheckResult
from .finite_difference import ComplexMeasure, FDConfig, fd_directional
from .gauss_bonnet import gauss_bonnet
from .monte_carlo import MCConfig, compare_fractions, mc_fractions
from .steiner import steiner_fit
from ..complex.alpha_complex import AlphaComplex, build_alpha_complex
from ..gradients.motion import random_momentum
from ..gradients.mean_curvature import mean_curvature_gradient
from ..gradients.volume_area import area_gradient, volume_gradient
from ..measures.intrinsic_volumes import (
    weighted_area,
    weighted_gaussian_curvature,
    weighted_mean_curvature,
    weighted_volume,
)
from ..utils.exceptions import CrossedDegeneracy, DegenerateState, TopologyChange
from ..utils.helpers import relative_error

logger = logging.getLogger(__name__)

GRADIENTS = {
    "volume": (weighted_volume, volume_gradient),
    "area": (weighted_area, area_gradient),
    "mean": (weighted_mean_curvature, mean_curvature_gradient),
}


class FiniteDifferenceCheck(BaseCheck):
    """Analytic directional derivatives against central differences."""

    def get_check_name(self) -> str:
        return "finite_difference"

    def run(self, complex_: AlphaComplex) -> CheckResult:
        ctx = self.context
        cfg = FDConfig(step=ctx.fd_step)
        rng = np.random.default_rng(ctx.seed)
        momenta = [random_momentum(complex_.balls.n, rng) for _ in range(ctx.momenta)]
        fields = {}
        for name, (_, gradient) in GRADIENTS.items():
            try:
                fields[name] = gradient(complex_)
            except DegenerateState as exc:
                return self.skipped(f"{name} gradient undefined: {exc}",
                                    case_label=exc.case_label)
        rows = []
        for name, (measure, _) in GRADIENTS.items():
            field = fields[name]
            wrapped = ComplexMeasure(measure, ctx.tolerance, name)
            for k, t in enumerate(momenta):
                try:
                    numeric = fd_directional(wrapped, complex_.balls, t, cfg, ctx.tolerance)
                except CrossedDegeneracy as exc:
                    return self.skipped(str(exc), marker="CrossedDegeneracy")
                analytic = field.directional(t)
                rows.append({"measure": name, "momentum": k, "analytic": analytic,
                             "numeric": numeric, "agrees": cfg.agrees(analytic, numeric)})
        passed = all(row["agrees"] for row in rows)
        return CheckResult(self.get_check_name(), passed, details={"comparisons": rows})


class MonteCarloCheck(BaseCheck):
    """Sphere and ball fractions against Monte-Carlo sampling."""

    def get_check_name(self) -> str:
        return "monte_carlo"

    def run(self, complex_: AlphaComplex) -> CheckResult:
        ctx = self.context
        cfg = MCConfig(samples=ctx.samples, seed=ctx.seed, n_jobs=ctx.n_jobs)
        table = compare_fractions(complex_, mc_fractions(complex_.balls, cfg), ctx.samples)
        passed = bool(table["sigma_ok"].all() and table["nu_ok"].all())
        return CheckResult(self.get_check_name(), passed,
                           details={"fractions": table.reset_index().to_dict(orient="records")})


class SteinerCheck(BaseCheck):
    """Unweighted area and mean curvature against the thickening fit."""

    area_tolerance = 1e-4
    mean_tolerance = 1e-3

    def get_check_name(self) -> str:
        return "steiner"

    def run(self, complex_: AlphaComplex) -> CheckResult:
        balls = complex_.balls.with_weights(np.ones(complex_.balls.n))
        try:
            fit = steiner_fit(balls, tol=self.context.tolerance)
        except TopologyChange as exc:
            return self.skipped(str(exc), marker="TopologyChange")
        unit = build_alpha_complex(balls, self.context.tolerance)
        area, mean = weighted_area(unit), weighted_mean_curvature(unit)
        area_error = relative_error(fit.area_estimate, area)
        mean_error = relative_error(fit.mean_estimate, mean)
        passed = area_error <= self.area_tolerance and mean_error <= self.mean_tolerance
        return CheckResult(self.get_check_name(), passed, details={
            "area": area, "area_estimate": fit.area_estimate, "area_error": area_error,
            "mean": mean, "mean_estimate": fit.mean_estimate, "mean_error": mean_error,
            "residual": fit.residual,
        })


class GaussBonnetCheck(BaseCheck):
    """Unweighted Gaussian curvature against 2 pi chi of the boundary."""

    tolerance = 1e-9

    def get_check_name(self) -> str:
        return "gauss_bonnet"

    def run(self, complex_: AlphaComplex) -> CheckResult:
        try:
            result = gauss_bonnet(complex_, self.context.tolerance)
        except DegenerateState as exc:
            return self.skipped(str(exc), case_label=exc.case_label)
        balls = complex_.balls.with_weights(np.ones(complex_.balls.n))
        gauss = weighted_gaussian_curvature(complex_, balls)
        error = abs(gauss - result.value)
        passed = error <= self.tolerance * max(1.0, abs(result.value)) and result.agrees_with_complex()
        return CheckResult(self.get_check_name(), passed,
                           details={"gauss": gauss, "two_pi_chi": result.value,
                                    "euler_characteristic": result.euler_characteristic,
                                    "corners": result.corner_count, "arcs": result.arc_count,
                                    "patches": result.patch_count, "loops": result.loop_count,
                                    "boundary_balls": result.boundary_balls,
                                    "complex_euler_characteristic": result.complex_euler_characteristic,
                                    "counts_consistent": result.consistent()})
