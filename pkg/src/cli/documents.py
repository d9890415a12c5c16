"""
JSON result documents written by the command-line front end.

Floats are written by ``json`` in their shortest repr, which reads back
bit-identical; NaN and infinities become ``null``.
"""

import json
import math
from dataclasses import dataclass, field, is_dataclass, asdict
from enum import Enum
from typing import Any, Dict, List, Optional

import numpy as np
import pandas as pd


def to_plain(value: Any) -> Any:
    """Convert numpy, pandas, enum and dataclass values to JSON-ready data."""
    if isinstance(value, dict):
        return {str(k): to_plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        items = sorted(value) if isinstance(value, (set, frozenset)) else value
        return [to_plain(v) for v in items]
    if isinstance(value, pd.DataFrame):
        return to_plain(value.reset_index().to_dict(orient="records"))
    if isinstance(value, pd.Series):
        return to_plain(value.to_dict())
    if isinstance(value, np.ndarray):
        return to_plain(value.tolist())
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        return float(value)
    if isinstance(value, Enum):
        return to_plain(value.value)
    if hasattr(value, "as_dict"):
        return to_plain(value.as_dict())
    if is_dataclass(value):
        return to_plain(asdict(value))
    return value


def _finite_or_none(value: Any) -> Any:
    if isinstance(value, float) and not math.isfinite(value):
        return None
    if isinstance(value, dict):
        return {k: _finite_or_none(v) for k, v in value.items()}
    if isinstance(value, list):
        return [_finite_or_none(v) for v in value]
    return value


def dumps(value: Any, indent: Optional[int] = 2) -> str:
    """Serialize to JSON; floats keep their shortest round-tripping repr."""
    return json.dumps(_finite_or_none(to_plain(value)), indent=indent, allow_nan=False,
                      default=str)


@dataclass
class ResultDocument:
    """Output of one CLI command; errors are embedded rather than raised."""
    command: Optional[str]
    status: str = "ok"
    input_digest: Dict[str, Optional[str]] = field(default_factory=dict)
    payload: Dict[str, Any] = field(default_factory=dict)
    degeneracies: List[Any] = field(default_factory=list)
    error: Optional[Dict[str, Any]] = None

    def fail(self, exc: Exception, **details) -> "ResultDocument":
        self.status = "error"
        self.error = {"type": type(exc).__name__, "message": str(exc), **details}
        return self

    def as_dict(self) -> Dict[str, Any]:
        document = {
            "command": self.command,
            "status": self.status,
            "input_digest": self.input_digest,
            **self.payload,
            "degeneracies": self.degeneracies,
        }
        if self.error is not None:
            document["error"] = self.error
        return document

    def to_json(self, indent: Optional[int] = 2) -> str:
        return dumps(self.as_dict(), indent)
