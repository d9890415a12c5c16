"""
Base class for oracle checks that compare an analytic result against an
independent computation.
"""

import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any, Dict

from ..complex.alpha_complex import AlphaComplex
from ..utils.config import DEFAULT_FD_STEP, DEFAULT_MC_SAMPLES, DEFAULT_TOLERANCE

logger = logging.getLogger(__name__)


@dataclass
class CheckContext:
    """Parameters shared by all checks of one run."""
    seed: int = 0
    samples: int = DEFAULT_MC_SAMPLES
    fd_step: float = DEFAULT_FD_STEP
    momenta: int = 3
    tolerance: float = DEFAULT_TOLERANCE
    n_jobs: int = 1


@dataclass
class CheckResult:
    """Outcome of one check; failures are data, not exceptions."""
    name: str
    passed: bool
    skipped: bool = False
    details: Dict[str, Any] = field(default_factory=dict)

    def as_dict(self) -> Dict[str, Any]:
        return {"name": self.name, "passed": self.passed,
                "skipped": self.skipped, "details": self.details}


class BaseCheck(ABC):
    """
    Base class for all oracle checks.

    Subclasses implement ``run`` and describe themselves through
    ``get_check_name`` and ``get_description``.
    """

    def __init__(self, context: CheckContext = None):
        self.context = context or CheckContext()

    @abstractmethod
    def run(self, complex_: AlphaComplex) -> CheckResult:
        """Run the check on one complex."""

    @abstractmethod
    def get_check_name(self) -> str:
        """Short registry name."""

    def get_description(self) -> str:
        return (self.__doc__ or "").strip().splitlines()[0] if self.__doc__ else ""

    def skipped(self, reason: str, **details) -> CheckResult:
        logger.info(f"Check {self.get_check_name()} skipped: {reason}")
        return CheckResult(self.get_check_name(), passed=False, skipped=True,
                           details={"reason": reason, **details})
