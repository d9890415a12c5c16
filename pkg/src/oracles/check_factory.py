"""
Registry of oracle checks.
"""

import logging
from typing import Dict, List, Optional, Type

from .base_check import BaseCheck, CheckContext, CheckResult
from .checks import FiniteDifferenceCheck, GaussBonnetCheck, MonteCarloCheck, SteinerCheck
from ..complex.alpha_complex import AlphaComplex

logger = logging.getLogger(__name__)


class CheckFactory:
    """
    Factory for oracle checks.

    Checks are registered by name and run in registration order.
    """

    def __init__(self):
        self._checks: Dict[str, Type[BaseCheck]] = {
            'finite_difference': FiniteDifferenceCheck,
            'monte_carlo': MonteCarloCheck,
            'steiner': SteinerCheck,
            'gauss_bonnet': GaussBonnetCheck,
        }

    def get_check(self, name: str, context: Optional[CheckContext] = None) -> Optional[BaseCheck]:
        """
        Get a check by name.

        Args:
            name: Registry name (e.g. 'steiner')
            context: Shared run parameters

        Returns:
            Check instance or None if the name is unknown
        """
        check_class = self._checks.get(name.lower())
        if check_class is None:
            logger.warning(f"Check '{name}' not supported")
            return None
        return check_class(context)

    def get_supported_checks(self) -> List[str]:
        return list(self._checks.keys())

    def register_check(self, name: str, check_class: Type[BaseCheck]):
        """
        Register a new check.

        Args:
            name: Registry name
            check_class: Check class to register
        """
        if not issubclass(check_class, BaseCheck):
            raise ValueError("Check class must inherit from BaseCheck")
        self._checks[name.lower()] = check_class
        logger.info(f"Registered check: {name}")

    def get_check_info(self) -> Dict:
        """Names and one-line descriptions of all registered checks."""
        return {
            'total_checks': len(self._checks),
            'checks': {name: {'class_name': cls.__name__, 'description': cls(None).get_description()}
                       for name, cls in self._checks.items()},
        }

    def run_all(self, complex_: AlphaComplex, context: CheckContext,
                names: Optional[List[str]] = None) -> List[CheckResult]:
        """Run the selected (default all) checks on one complex."""
        results = []
        for name in names or self.get_supported_checks():
            check = self.get_check(name, context)
            if check is None:
                continue
            result = check.run(complex_)
            status = "skipped" if result.skipped else ("passed" if result.passed else "FAILED")
            logger.info(f"Check {name}: {status}")
            results.append(result)
        return results
