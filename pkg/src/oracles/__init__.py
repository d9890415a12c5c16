"""
Independent verification backends: finite differences, Monte-Carlo
sampling, the Steiner thickening fit and Gauss-Bonnet.
"""

from .finite_difference import FDConfig, ComplexMeasure, fd_directional
from .monte_carlo import (
    MCConfig,
    mc_fractions,
    mc_circle_fractions,
    mc_union_volume,
    compare_fractions,
)
from .steiner import SteinerFit, steiner_fit, crevice_correction
from .gauss_bonnet import GaussBonnetResult, gauss_bonnet
from .base_check import BaseCheck, CheckContext, CheckResult
from .checks import FiniteDifferenceCheck, MonteCarloCheck, SteinerCheck, GaussBonnetCheck
from .check_factory import CheckFactory

__all__ = [
    "FDConfig",
    "ComplexMeasure",
    "fd_directional",
    "MCConfig",
    "mc_fractions",
    "mc_circle_fractions",
    "mc_union_volume",
    "compare_fractions",
    "SteinerFit",
    "steiner_fit",
    "crevice_correction",
    "GaussBonnetResult",
    "gauss_bonnet",
    "BaseCheck",
    "CheckContext",
    "CheckResult",
    "FiniteDifferenceCheck",
    "MonteCarloCheck",
    "SteinerCheck",
    "GaussBonnetCheck",
    "CheckFactory",
]
