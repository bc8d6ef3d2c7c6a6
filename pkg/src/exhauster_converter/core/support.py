"""Support values of a single polytope: linear (exhausters) and affine (coexhausters)."""

import numpy as np

from ..constants import SupportMode
from ..models import Polytope
from ..types import FloatArray, VectorLike
from ..utils.errors import DimensionMismatchError


def _as_direction(direction: VectorLike, expected: int, what: str) -> FloatArray:
    vector = np.asarray(direction, dtype=np.float64).reshape(-1)
    if vector.shape[0] != expected:
        raise DimensionMismatchError(what, expected, vector.shape[0])
    return vector


def support_max(polytope: Polytope, direction: VectorLike) -> float:
    """
    Maximum of <v, direction> over the polytope.

    Exact for polytopes: a linear function attains its maximum at a vertex.

    Raises:
        DimensionMismatchError: If len(direction) != polytope.dim.
    """
    vector = _as_direction(direction, polytope.dim, "direction")
    return float(np.max(polytope.as_array() @ vector))


def support_min(polytope: Polytope, direction: VectorLike) -> float:
    """Minimum of <w, direction> over the polytope; see support_max."""
    vector = _as_direction(direction, polytope.dim, "direction")
    return float(np.min(polytope.as_array() @ vector))


def affine_values(vertices: FloatArray, points: FloatArray) -> FloatArray:
    """
    Values a + <v, x> of every stored [a, v] at every point x.

    Args:
        vertices: (m, n+1) array, affine constant first.
        points: (N, n) array of evaluation points.

    Returns:
        FloatArray: (m, N) array of affine values.
    """
    return vertices[:, :1] + vertices[:, 1:] @ points.T


def affine_support(polytope: Polytope, direction: VectorLike, mode: SupportMode) -> float:
    """
    Max or min over [a, v] in the polytope of a + <v, direction>.

    Raises:
        DimensionMismatchError: If polytope.dim != len(direction) + 1.
    """
    vector = np.asarray(direction, dtype=np.float64).reshape(-1)
    if polytope.dim != vector.shape[0] + 1:
        raise DimensionMismatchError("affine direction", polytope.dim - 1, vector.shape[0])
    values = affine_values(polytope.as_array(), vector.reshape(1, -1))[:, 0]
    return float(np.max(values) if mode is SupportMode.MAX else np.min(values))
