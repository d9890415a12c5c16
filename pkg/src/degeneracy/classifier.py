"""
Classification of the combinatorial change between two nearby states.

A single sphere-intersection event adds or removes an interval
[lower, upper] of the face lattice: one critical simplex, or a pair,
quadruple or octuple of simplices. A Voronoi event retriangulates five
balls without touching the alpha complex outside their simplices.
"""

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, FrozenSet, Optional, Tuple

import numpy as np

from .report import DegeneracyReport, flip_label
from ..complex.alpha_complex import AlphaComplex, build_alpha_complex
from ..complex.ball_set import BallSet
from ..utils.config import DEFAULT_TOLERANCE
from ..utils.exceptions import UnrecognizedEvent

logger = logging.getLogger(__name__)

INTERVAL_LABELS = {
    (1, 1): "C1",
    (2, 2): "C2",
    (3, 3): "C3",
    (0, 1): "N01",
    (1, 2): "N12",
    (2, 3): "N23",
    (0, 2): "N02",
    (1, 3): "N13",
    (0, 3): "N03",
}


def _faces_of(tets) -> FrozenSet[Tuple[int, ...]]:
    out = set()
    for tet in tets:
        for size in range(1, 5):
            out.update(combinations(tet, size))
    return frozenset(out)


def _interval_label(diff: FrozenSet[Tuple[int, ...]]) -> Optional[str]:
    lower = min(diff, key=len)
    upper = max(diff, key=len)
    if sum(1 for s in diff if len(s) == len(lower)) != 1:
        return None
    if sum(1 for s in diff if len(s) == len(upper)) != 1:
        return None
    if not all(set(lower) <= set(s) <= set(upper) for s in diff):
        return None
    if len(diff) != 2 ** (len(upper) - len(lower)):
        return None
    return INTERVAL_LABELS.get((len(lower) - 1, len(upper) - 1))


def classify_event(before: AlphaComplex, after: AlphaComplex) -> DegeneracyReport:
    """
    Name the event that turns ``before`` into ``after``.

    Raises:
        UnrecognizedEvent: the change is not a single general-position
            violation (no change, or several simultaneous ones)
    """
    removed_tets = before.mosaic.tet_set() - after.mosaic.tet_set()
    added_tets = after.mosaic.tet_set() - before.mosaic.tet_set()
    removed = before.key() - after.key()
    added = after.key() - before.key()

    if removed_tets or added_tets:
        quintuple = set(v for t in removed_tets | added_tets for v in t)
        faces = _faces_of(removed_tets | added_tets)
        if (len(removed_tets) + len(added_tets) == 5 and len(quintuple) == 5
                and (removed | added) <= faces):
            label = flip_label(len(removed_tets), len(added_tets))
            logger.info(f"Classified retriangulation of {sorted(quintuple)} as {label}")
            return DegeneracyReport.create(label, quintuple, 0.0)
        raise UnrecognizedEvent(
            f"Mosaic changed by {len(removed_tets)} removed and {len(added_tets)} added "
            "tetrahedra, which is not a single flip")

    if not removed and not added:
        raise UnrecognizedEvent("The two states have the same complex")
    if removed and added:
        raise UnrecognizedEvent("Simplices both appear and disappear")
    diff = added or removed
    label = _interval_label(diff)
    if label is None:
        raise UnrecognizedEvent(
            f"Change of {len(diff)} simplices is not an interval of the face lattice")
    upper = max(diff, key=len)
    logger.info(f"Classified event on {upper} as {label}")
    return DegeneracyReport.create(label, upper, 0.0, appearing=bool(added))


def interpolation(start: BallSet, end: BallSet) -> Callable[[float], BallSet]:
    """
    Linear motion of the centers from ``start`` (s=0) to ``end`` (s=1).

    Raises:
        ValueError: the two sets differ in size, radii or weights
    """
    if start.n != end.n:
        raise ValueError(f"Ball counts differ ({start.n} vs {end.n})")
    if not (np.array_equal(start.radii, end.radii) and np.array_equal(start.weights, end.weights)):
        raise ValueError("Both states must have identical radii and weights")
    a, b = start.centers, end.centers
    return lambda s: start.with_centers(a + s * (b - a))


@dataclass
class LocatedEvent:
    """Bracket [lower, upper] of the interpolation parameter around an event."""
    lower: float
    upper: float
    before: AlphaComplex
    after: AlphaComplex
    report: DegeneracyReport


def _state_key(complex_: AlphaComplex):
    return complex_.key(), complex_.mosaic.tet_set()


def locate_event(start: BallSet, end: BallSet, tol: float = DEFAULT_TOLERANCE,
                 resolution: float = 1e-9) -> LocatedEvent:
    """
    Bisect the linear interpolation for the parameter where the complex
    changes, then classify the change.

    Raises:
        UnrecognizedEvent: no change between the states, or more than one
    """
    path = interpolation(start, end)
    lo_complex = build_alpha_complex(path(0.0), tol)
    hi_complex = build_alpha_complex(path(1.0), tol)
    first, last = _state_key(lo_complex), _state_key(hi_complex)
    if first == last:
        raise UnrecognizedEvent("No combinatorial change between the two states")

    lo, hi = 0.0, 1.0
    while hi - lo > resolution:
        mid = 0.5 * (lo + hi)
        complex_ = build_alpha_complex(path(mid), tol)
        if _state_key(complex_) == first:
            lo, lo_complex = mid, complex_
        else:
            hi, hi_complex = mid, complex_
    if _state_key(hi_complex) != last:
        raise UnrecognizedEvent("The interpolation crosses more than one event")
    report = classify_event(lo_complex, hi_complex)
    logger.info(f"Event {report.case_label} located in [{lo:.12f}, {hi:.12f}]")
    return LocatedEvent(lo, hi, lo_complex, hi_complex, report)
