"""
Helper utility functions for ballmorph.
"""

import math
from typing import Dict, Any, Iterable, Sequence

import numpy as np


def format_float(value: float) -> str:
    """Format a float with 17 significant digits (lossless round trip)."""
    return format(float(value), ".17g")


def unit_vector(v: np.ndarray) -> np.ndarray:
    """Return v / ||v||; raises ValueError for the zero vector."""
    norm = float(np.linalg.norm(v))
    if norm == 0.0:
        raise ValueError("Cannot normalize the zero vector")
    return np.asarray(v, dtype=float) / norm


def fsum_vectors(vectors: Iterable[np.ndarray], dim: int = 3) -> np.ndarray:
    """Compensated component-wise sum of 3-vectors."""
    columns = [[] for _ in range(dim)]
    for v in vectors:
        for c in range(dim):
            columns[c].append(float(v[c]))
    return np.array([math.fsum(col) for col in columns])


def orthonormal_frame(axis: np.ndarray) -> np.ndarray:
    """
    Build (e1, e2) with e1 x e2 = axis for a unit axis.

    Args:
        axis: Unit vector

    Returns:
        2x3 array whose rows are e1 and e2
    """
    helper = np.zeros(3)
    helper[int(np.argmin(np.abs(axis)))] = 1.0
    e1 = np.cross(axis, helper)
    e1 /= np.linalg.norm(e1)
    e2 = np.cross(axis, e1)
    return np.vstack([e1, e2])


def validate_ball_row(values: Sequence[float]) -> Dict[str, Any]:
    """Validate one ``x y z r w`` record."""
    if len(values) != 5:
        return {'valid': False, 'error': f'Expected 5 fields (x y z r w), got {len(values)}'}
    if not all(math.isfinite(v) for v in values):
        return {'valid': False, 'error': 'Fields must be finite numbers'}
    if values[3] <= 0:
        return {'valid': False, 'error': f'Radius must be positive, got {values[3]}'}
    return {'valid': True, 'error': None}


def validate_coefficients(values: Sequence[float], expected: int = 4) -> Dict[str, Any]:
    """Validate a list of morphometric coefficients."""
    if len(values) != expected:
        return {'valid': False, 'error': f'Expected {expected} coefficients, got {len(values)}'}
    if not all(math.isfinite(v) for v in values):
        return {'valid': False, 'error': 'Coefficients must be finite'}
    return {'valid': True, 'error': None}


def relative_error(estimate: float, reference: float, floor: float = 1e-300) -> float:
    """|estimate - reference| / max(|reference|, floor)."""
    return abs(estimate - reference) / max(abs(reference), floor)
