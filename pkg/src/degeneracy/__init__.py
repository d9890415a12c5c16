"""
General-position checks, event classification and order probes.
"""

from .report import (
    Condition,
    MeanOrder,
    GradientJump,
    DegeneracyReport,
    OrderProbe,
    PREDICTIONS,
    SPHERE_CASES,
    prediction_for,
)
from .detector import check_general_position, triple_discriminant
from .classifier import classify_event, interpolation, locate_event, LocatedEvent
from .probes import probe_order, log_log_slope

__all__ = [
    "Condition",
    "MeanOrder",
    "GradientJump",
    "DegeneracyReport",
    "OrderProbe",
    "PREDICTIONS",
    "SPHERE_CASES",
    "prediction_for",
    "check_general_position",
    "triple_discriminant",
    "classify_event",
    "interpolation",
    "locate_event",
    "LocatedEvent",
    "probe_order",
    "log_log_slope",
]
