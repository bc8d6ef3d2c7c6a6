"""Evaluation of the four min-max and max-min representations of a family."""

import logging

import numpy as np

from ..constants import FamilyKind
from ..models import Family, Polytope
from ..types import FloatArray, PointsLike, VectorLike
from ..utils.errors import DimensionMismatchError
from .support import affine_values

logger = logging.getLogger(__name__)


def as_points(points: PointsLike, space_dim: int) -> FloatArray:
    """Coerce a single point or a batch of points into an (N, space_dim) array."""
    array = np.asarray(points, dtype=np.float64)
    if array.ndim == 1:
        array = array.reshape(1, -1)
    if array.ndim != 2 or array.shape[1] != space_dim:
        raise DimensionMismatchError(
            "evaluation point", space_dim, array.shape[-1] if array.ndim else 0
        )
    return array


def vertex_values(family: Family, polytope: Polytope, points: FloatArray) -> FloatArray:
    """(m, N) values of every vertex of one member set at every point."""
    vertices = polytope.as_array()
    if family.kind.is_coexhauster:
        return affine_values(vertices, points)
    return vertices @ points.T


def support_table(family: Family, points: PointsLike) -> FloatArray:
    """
    Inner support value of every member set at every point.

    Upper kinds take the max over each set, lower kinds the min.

    Returns:
        FloatArray: (k, N) array, row i belonging to family.sets[i].
    """
    batch = as_points(points, family.space_dim)
    reduce = np.max if family.kind.is_upper else np.min
    return np.vstack(
        [reduce(vertex_values(family, polytope, batch), axis=0) for polytope in family.sets]
    )


def combine_sets(kind: FamilyKind, table: FloatArray) -> FloatArray:
    """Outer reduction across sets: min for upper kinds, max for lower kinds."""
    return np.min(table, axis=0) if kind.is_upper else np.max(table, axis=0)


def eval_many(family: Family, points: PointsLike) -> FloatArray:
    """
    Evaluate the represented function at a batch of points.

    Args:
        family: Any of the four family kinds.
        points: (N, space_dim) array, or a single point.

    Returns:
        FloatArray: (N,) values.

    Raises:
        DimensionMismatchError: If points do not have space_dim columns.
    """
    return combine_sets(family.kind, support_table(family, points))


def eval_family(family: Family, direction: VectorLike) -> float:
    """
    Evaluate the represented function at one point.

    upper_exhauster: min over sets of support_max; lower_exhauster: max over
    sets of support_min; upper_coexhauster: min over sets of the affine max;
    lower_coexhauster: max over sets of the affine min.
    """
    return float(eval_many(family, direction)[0])


def normalize(family: Family) -> Family:
    """
    Shift a coexhauster's affine constants so that it evaluates to 0 at the origin.

    Subtracting c = eval(F, 0) from every constant lowers the represented
    function by exactly c. Exhauster families already vanish at the origin
    and are returned unchanged.
    """
    if not family.kind.is_coexhauster:
        return family
    offset = eval_family(family, np.zeros(family.space_dim))
    logger.debug("normalizing %s by offset %r", family.kind.value, offset)
    shifted = []
    for polytope in family.sets:
        vertices = polytope.as_array().copy()
        vertices[:, 0] -= offset
        shifted.append(Polytope.from_vertices(vertices))
    return Family.build(family.kind, family.space_dim, shifted)
