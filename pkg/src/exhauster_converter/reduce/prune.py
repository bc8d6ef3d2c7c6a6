"""Greedy removal of member sets that never decide the value on a sample."""

import logging
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ..config import config
from ..constants import FamilyKind, SamplerMode
from ..core import combine_sets, probe_points, support_table
from ..models import DirectionSampler, Family
from ..types import FloatArray
from ..utils.sampling import check_sampler, sample_directions

logger = logging.getLogger(__name__)

# Local search for points where a removal would change the value
_SEARCH_STARTS = 32
_SEARCH_STEPS = 30
_SEARCH_STEP = 0.25
_SEARCH_DECAY = 0.85


def prune_sampled(
    family: Family,
    sampler: DirectionSampler,
    tol: Optional[float] = None,
    radii: Optional[Sequence[float]] = None,
) -> Family:
    """
    Drop member sets whose removal leaves the function unchanged on a sample.

    Candidates are tried largest vertex count first (ties by position). A set
    is removed when the family without it still matches the input family
    within `tol` at every sampled direction and every canonical probe, and a
    local ascent started from the sample points closest to a change finds no
    point where the removal matters. The result is certified on those points
    only; re-check it with check_equivalence on fresh directions. The last
    set is never removed.

    Raises:
        DimensionMismatchError: If sampler.dim != family.space_dim.
        SamplerModeError: If the sampler is half-sphere.
    """
    check_sampler(
        sampler,
        family.space_dim,
        (SamplerMode.FULL_SPHERE, SamplerMode.UNIFORM_ANGLES_2D),
        "pruning",
    )
    if len(family) < 2:
        return family

    limit = config.EXH_TOL if tol is None else tol
    points = probe_points(
        family.space_dim,
        sample_directions(sampler),
        family.kind.is_coexhauster,
        radii,
    )
    table = support_table(family, points)
    reference = combine_sets(family.kind, table)
    pieces = _PieceTable(family)

    active = np.ones(len(family), dtype=bool)
    order: List[int] = sorted(
        range(len(family)), key=lambda i: (-len(family.sets[i].vertices), i)
    )
    for index in order:
        if active.sum() == 1:
            break
        active[index] = False
        deviation = np.max(np.abs(combine_sets(family.kind, table[active]) - reference))
        if deviation > limit:
            active[index] = True
            continue
        if pieces.removal_matters(index, active, points, table, limit):
            logger.debug("kept set %d: removal changes the value off the sample", index)
            active[index] = True
            continue
        logger.debug("pruned set %d (deviation %.3g)", index, deviation)

    if active.all():
        return family
    return Family.build(
        family.kind,
        family.space_dim,
        [polytope for polytope, keep in zip(family.sets, active) if keep],
    )


class _PieceTable:
    """
    Member sets padded to a common vertex count for vectorized evaluation.

    Padding repeats a set's first vertex, which leaves its max and min
    unchanged. Vertices split into an affine offset (zero for exhausters)
    and a slope in R^n.
    """

    def __init__(self, family: Family):
        self.kind: FamilyKind = family.kind
        self.upper = family.kind.is_upper
        self.homogeneous = not family.kind.is_coexhauster
        width = max(family.vertex_counts)
        padded = []
        for polytope in family.sets:
            vertices = polytope.as_array()
            fill = np.repeat(vertices[:1], width - vertices.shape[0], axis=0)
            padded.append(np.vstack([vertices, fill]))
        stacked = np.stack(padded)
        if self.homogeneous:
            self.offsets = np.zeros(stacked.shape[:2])
            self.slopes = stacked
        else:
            self.offsets = stacked[:, :, 0]
            self.slopes = stacked[:, :, 1:]

    def evaluate(self, points: FloatArray) -> Tuple[FloatArray, FloatArray]:
        """Inner value (k, N) of every set and the slope (k, N, n) attaining it."""
        values = self.offsets[:, :, None] + np.einsum("kmn,Nn->kmN", self.slopes, points)
        pick = values.argmax(axis=1) if self.upper else values.argmin(axis=1)
        inner = np.take_along_axis(values, pick[:, None, :], axis=1)[:, 0, :]
        rows = np.arange(self.slopes.shape[0])[:, None]
        return inner, self.slopes[rows, pick]

    def gain(
        self, index: int, others: np.ndarray, inner: FloatArray, grads: FloatArray
    ) -> Tuple[FloatArray, FloatArray]:
        """
        How far the family without `index` moves away from the family value.

        Positive gain at a point means removing the set changes the function
        there. Returns the gain (N,) and an ascent direction (N, n).
        """
        rest = inner[others]
        best = rest.argmin(axis=0) if self.upper else rest.argmax(axis=0)
        columns = np.arange(inner.shape[1])
        rest_value = rest[best, columns]
        rest_grad = grads[others][best, columns]
        sign = 1.0 if self.upper else -1.0
        return (
            sign * (rest_value - inner[index]),
            sign * (rest_grad - grads[index]),
        )

    def removal_matters(
        self,
        index: int,
        active: np.ndarray,
        points: FloatArray,
        table: FloatArray,
        tol: float,
    ) -> bool:
        """Projected subgradient ascent on the gain from the most promising points."""
        others = active.copy()
        others[index] = False
        sign = 1.0 if self.upper else -1.0
        start_gain = sign * (combine_sets(self.kind, table[others]) - table[index])
        norms = np.linalg.norm(points, axis=1)
        usable = norms > 0.0 if self.homogeneous else np.ones(len(points), dtype=bool)
        candidates = np.flatnonzero(usable)
        if candidates.size == 0:
            return False
        ranked = candidates[np.argsort(-start_gain[candidates], kind="stable")]
        strict = ranked[start_gain[ranked] < -tol]
        chosen = np.unique(np.concatenate([ranked[:_SEARCH_STARTS], strict[:_SEARCH_STARTS]]))

        x = points[chosen].copy()
        for step in range(_SEARCH_STEPS + 1):
            if self.homogeneous:
                x /= np.linalg.norm(x, axis=1, keepdims=True)
            inner, grads = self.evaluate(x)
            gain, ascent = self.gain(index, others, inner, grads)
            if (gain > tol).any():
                return True
            length = np.linalg.norm(ascent, axis=1, keepdims=True)
            moving = length[:, 0] > 0.0
            if not moving.any():
                return False
            scale = _SEARCH_STEP * _SEARCH_DECAY**step
            scale = scale * np.maximum(np.linalg.norm(x, axis=1, keepdims=True), 1.0)
            previous = x.copy()
            x[moving] += (scale * ascent / np.where(length > 0.0, length, 1.0))[moving]
            # a step through the origin has no direction to project back to
            stuck = np.linalg.norm(x, axis=1) == 0.0
            x[stuck] = previous[stuck]
        return False
