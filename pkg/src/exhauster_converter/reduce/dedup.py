"""Exact removal of duplicate member sets."""

import logging
from typing import Dict, List, Tuple

import numpy as np

from ..config import config
from ..models import Family
from ..types import FloatArray

logger = logging.getLogger(__name__)


def dedup_sets(family: Family) -> Family:
    """
    Merge member sets whose canonical vertex lists coincide.

    Vertices are compared after lexicographic sorting, within the vertex
    tolerance. The first occurrence keeps its position. The represented
    function is unchanged at every point.

    Sets of equal shape are sorted on their coordinates rounded to the
    tolerance grid, so coinciding sets end up next to each other and only
    neighbours are compared.
    """
    tol = config.EXH_VERTEX_TOL
    canonical = [polytope.canonical() for polytope in family.sets]
    by_shape: Dict[Tuple[int, ...], List[int]] = {}
    for index, array in enumerate(canonical):
        by_shape.setdefault(array.shape, []).append(index)

    kept: List[int] = []
    for indices in by_shape.values():
        flat = np.stack([canonical[i].ravel() for i in indices])
        kept.extend(_first_of_each_group(flat, np.asarray(indices), tol))
    kept.sort()

    if len(kept) == len(family):
        return family
    logger.debug("merged %d duplicate sets", len(family) - len(kept))
    return Family.build(family.kind, family.space_dim, [family.sets[i] for i in kept])


def _first_of_each_group(flat: FloatArray, indices: np.ndarray, tol: float) -> List[int]:
    """Smallest original index among each run of rows equal within tol."""
    grid = np.round(flat / tol) if tol > 0 else flat
    order = np.lexsort(grid.T[::-1])
    ordered = flat[order]
    if len(order) > 1:
        gaps = np.abs(np.diff(ordered, axis=0)).max(axis=1)
        starts = np.concatenate([[True], gaps > tol])
    else:
        starts = np.ones(1, dtype=bool)
    group = np.cumsum(starts) - 1
    first = np.full(int(group[-1]) + 1, np.iinfo(np.intp).max, dtype=np.intp)
    np.minimum.at(first, group, indices[order])
    return first.tolist()
