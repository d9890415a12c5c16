"""
Implementation of the ``measures``, ``gradient``, ``check`` and
``classify`` commands.

Each command returns a ResultDocument and lets library exceptions
propagate; ``main`` turns them into error documents and exit codes.
"""

import logging
from typing import Dict, Optional

import numpy as np

from .ball_file import input_digest, read_ball_file
from .documents import ResultDocument
from ..complex.alpha_complex import build_alpha_complex
from ..complex.ball_set import BallSet
from ..degeneracy.classifier import interpolation, locate_event
from ..degeneracy.detector import check_general_position
from ..degeneracy.probes import probe_order
from ..gradients.energy import energy_gradient
from ..gradients.field import GradientField
from ..gradients.mean_curvature import mean_curvature_gradient
from ..gradients.volume_area import area_gradient, volume_gradient
from ..measures.energy import MorphometricCoefficients, morphometric_energy
from ..measures.intrinsic_volumes import compute_measures, weighted_mean_curvature
from ..oracles.base_check import CheckContext
from ..oracles.check_factory import CheckFactory
from ..utils.config import DEFAULT_TOLERANCE
from ..utils.exceptions import DegenerateState, ParseError

logger = logging.getLogger(__name__)

GRADIENT_CHOICES = ("volume", "area", "mean", "all", "energy")


def _load(path: str, probe: Optional[float]) -> BallSet:
    balls = read_ball_file(path)
    if probe:
        balls = balls.inflated(probe)
    return balls


def _field_record(field: GradientField) -> Dict:
    record = {"per_ball": field.g.reshape(-1, 3)}
    if field.has_decomposition:
        record.update(p=field.p.reshape(-1, 3), q=field.q.reshape(-1, 3), s=field.s.reshape(-1, 3))
    return record


def cmd_measures(path: str, mu: Optional[MorphometricCoefficients] = None,
                 probe: Optional[float] = None, tol: float = DEFAULT_TOLERANCE) -> ResultDocument:
    """All four measures, plus the energy when coefficients are given."""
    balls = _load(path, probe)
    complex_ = build_alpha_complex(balls, tol)
    measures = compute_measures(complex_)
    payload = {"measures": measures.as_dict(), "counts": complex_.counts()}
    if mu is not None:
        payload["mu"] = list(mu.as_tuple())
        payload["energy"] = morphometric_energy(measures, mu)
    return ResultDocument("measures", input_digest={path: input_digest(path)}, payload=payload,
                          degeneracies=check_general_position(complex_, tol=tol))


def cmd_gradient(path: str, which: str = "all", mu: Optional[MorphometricCoefficients] = None,
                 probe: Optional[float] = None, tol: float = DEFAULT_TOLERANCE) -> ResultDocument:
    """
    Per-ball gradient triples of the selected measures.

    Raises:
        ParseError: unknown selection, or ``energy`` without coefficients
        DegenerateState: the gradient is undefined at this state
    """
    if which not in GRADIENT_CHOICES:
        raise ParseError(f"--which must be one of {', '.join(GRADIENT_CHOICES)}, got {which!r}")
    if which == "energy" and mu is None:
        raise ParseError("--which energy needs --mu")
    balls = _load(path, probe)
    complex_ = build_alpha_complex(balls, tol)

    gradients = {}
    if which in ("volume", "all"):
        gradients["volume"] = _field_record(volume_gradient(complex_))
    if which in ("area", "all"):
        gradients["area"] = _field_record(area_gradient(complex_))
    if which in ("mean", "all"):
        gradients["mean"] = _field_record(mean_curvature_gradient(complex_))
    if which == "energy":
        try:
            gradients["energy"] = _field_record(energy_gradient(complex_, mu=mu))
        except ValueError as exc:
            raise ParseError(f"--mu: {exc}")
    payload = {"gradients": gradients}
    if mu is not None:
        payload["mu"] = list(mu.as_tuple())
    return ResultDocument("gradient", input_digest={path: input_digest(path)}, payload=payload,
                          degeneracies=check_general_position(complex_, tol=tol))


def cmd_check(path: str, context: CheckContext, names=None) -> ResultDocument:
    """Run the registered oracle checks; failed checks are data."""
    balls = read_ball_file(path)
    complex_ = build_alpha_complex(balls, context.tolerance)
    results = CheckFactory().run_all(complex_, context, names)
    payload = {
        "seed": context.seed,
        "samples": context.samples,
        "fd_step": context.fd_step,
        "checks": results,
        "all_passed": all(r.passed for r in results if not r.skipped),
    }
    return ResultDocument("check", input_digest={path: input_digest(path)}, payload=payload,
                          degeneracies=check_general_position(complex_, tol=context.tolerance))


def _flip_continuity(event) -> Dict:
    """Mean curvature and its gradient on both sides of a flip."""
    before, after = event.before, event.after
    mean_before, mean_after = weighted_mean_curvature(before), weighted_mean_curvature(after)
    gradient_before = mean_curvature_gradient(before).g
    gradient_after = mean_curvature_gradient(after).g
    return {
        "straddle": event.upper - event.lower,
        "mean_before": mean_before,
        "mean_after": mean_after,
        "mean_jump": abs(mean_after - mean_before),
        "gradient_jump": float(np.max(np.abs(gradient_after - gradient_before))),
    }


def cmd_classify(path_a: str, path_b: str, tol: float = DEFAULT_TOLERANCE) -> ResultDocument:
    """
    Locate and classify the event on the segment between two states, then
    probe the order of the mean-curvature change there.

    Raises:
        ParseError: the states differ in ball count, radii or weights
        UnrecognizedEvent: no event or several events on the segment
    """
    start, end = read_ball_file(path_a), read_ball_file(path_b)
    try:
        segment = interpolation(start, end)
    except ValueError as exc:
        raise ParseError(str(exc))
    event = locate_event(start, end, tol)
    report = event.report

    at = 0.5 * (event.lower + event.upper)
    length = float(np.max(np.linalg.norm(end.centers - start.centers, axis=1)))
    direction = -1.0 if report.appearing is False else 1.0

    def trajectory(eps: float) -> BallSet:
        return segment(at + direction * eps / length)

    payload = {"event": report, "bracket": [event.lower, event.upper]}
    try:
        payload["probe"] = probe_order(segment(at), trajectory, report, tol=tol)
    except DegenerateState as exc:
        logger.warning(f"Order probe failed: {exc}")
        payload["probe"] = None
    if report.case_label.startswith("FLIP"):
        payload["continuity"] = _flip_continuity(event)
    return ResultDocument("classify",
                          input_digest={path_a: input_digest(path_a), path_b: input_digest(path_b)},
                          payload=payload, degeneracies=[report])
