"""
Degeneracy reports and the expected behavior of the weighted mean
curvature at each kind of event.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Optional, Tuple

import pandas as pd


class Condition(Enum):
    """General-position condition a state violates."""
    VORONOI = "I"
    SPHERES = "II"


class MeanOrder(Enum):
    """How fast the mean curvature changes in the distance to the event."""
    SQRT_EPS = "sqrt(eps)"
    EPS = "eps"

    @property
    def exponent(self) -> float:
        return 0.5 if self is MeanOrder.SQRT_EPS else 1.0


class GradientJump(Enum):
    """Whether the mean-curvature gradient stays bounded at the event."""
    UNBOUNDED = "inf"
    BOUNDED = "1"


SPHERE_CASES = ("C1", "C2", "C3", "N01", "N02", "N03", "N12", "N13", "N23")

PREDICTIONS: Dict[str, Tuple[MeanOrder, GradientJump]] = {
    "C1": (MeanOrder.SQRT_EPS, GradientJump.UNBOUNDED),
    "C2": (MeanOrder.SQRT_EPS, GradientJump.UNBOUNDED),
    "N02": (MeanOrder.SQRT_EPS, GradientJump.UNBOUNDED),
    "N12": (MeanOrder.SQRT_EPS, GradientJump.UNBOUNDED),
    "C3": (MeanOrder.EPS, GradientJump.BOUNDED),
    "N01": (MeanOrder.EPS, GradientJump.BOUNDED),
    "N03": (MeanOrder.EPS, GradientJump.BOUNDED),
    "N13": (MeanOrder.EPS, GradientJump.BOUNDED),
    "N23": (MeanOrder.EPS, GradientJump.BOUNDED),
}
FLIP_PREDICTION = (MeanOrder.EPS, GradientJump.BOUNDED)


def flip_label(before: int, after: int) -> str:
    return f"FLIP({before}->{after})"


def prediction_for(case_label: str) -> Tuple[MeanOrder, GradientJump]:
    if case_label.startswith("FLIP"):
        return FLIP_PREDICTION
    try:
        return PREDICTIONS[case_label]
    except KeyError:
        raise ValueError(f"Unknown case label {case_label!r}")


@dataclass
class DegeneracyReport:
    """
    One general-position violation.

    Attributes:
        condition: Which condition is violated
        case_label: C1..N23 or FLIP(b->a)
        involved: Ball indices of the violating simplex or quintuple
        proximity: Normalized distance to the event (0 means on it)
        predicted_mean_order: Expected order of the mean-curvature change
        predicted_gradient_jump: Expected gradient behavior
        appearing: For classified events, True if simplices appear
    """
    condition: Condition
    case_label: str
    involved: Tuple[int, ...]
    proximity: float
    predicted_mean_order: MeanOrder
    predicted_gradient_jump: GradientJump
    appearing: Optional[bool] = None

    @classmethod
    def create(cls, case_label: str, involved, proximity: float,
               appearing: Optional[bool] = None) -> "DegeneracyReport":
        order, jump = prediction_for(case_label)
        condition = Condition.VORONOI if case_label.startswith("FLIP") else Condition.SPHERES
        return cls(condition, case_label, tuple(sorted(int(v) for v in involved)),
                   abs(float(proximity)), order, jump, appearing)

    def as_dict(self) -> Dict[str, Any]:
        return {
            "condition": self.condition.value,
            "case_label": self.case_label,
            "involved": list(self.involved),
            "proximity": self.proximity,
            "predicted_mean_order": self.predicted_mean_order.value,
            "predicted_gradient_jump": self.predicted_gradient_jump.value,
            "appearing": self.appearing,
        }


@dataclass
class OrderProbe:
    """Measured behavior of the mean curvature along a trajectory."""
    case_label: str
    mean_exponent: float
    gradient_slope: float
    gradient_bounded: bool
    matches_prediction: bool
    samples: pd.DataFrame = field(repr=False, default_factory=pd.DataFrame)

    def as_dict(self) -> Dict[str, Any]:
        return {
            "case_label": self.case_label,
            "mean_exponent": self.mean_exponent,
            "gradient_slope": self.gradient_slope,
            "gradient_bounded": self.gradient_bounded,
            "matches_prediction": self.matches_prediction,
            "samples": self.samples.to_dict(orient="records"),
        }
