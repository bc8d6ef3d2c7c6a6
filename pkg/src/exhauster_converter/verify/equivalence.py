"""Sampled oracle for deciding whether two families represent the same function."""

import logging
from typing import Optional, Sequence

import numpy as np

from ..config import config
from ..constants import SamplerMode
from ..core import eval_many, probe_points
from ..models import DirectionSampler, EquivalenceReport, Family
from ..utils.errors import DimensionMismatchError
from ..utils.sampling import check_sampler, sample_directions

logger = logging.getLogger(__name__)


def check_equivalence(
    first: Family,
    second: Family,
    sampler: DirectionSampler,
    tol: Optional[float] = None,
    radii: Optional[Sequence[float]] = None,
) -> EquivalenceReport:
    """
    Compare two families as functions.

    Both families are evaluated at the origin, at +-e_i, at the all-ones
    vector and at every sampled direction. If either family is a
    coexhauster, every point except the origin is also scaled by each of
    `radii` (default: the configured coexhauster radii). Kinds may differ.

    Args:
        first: Any family.
        second: Any family with the same space_dim.
        sampler: Unit directions in R^space_dim.
        tol: Largest admissible deviation (defaults to EXH_TOL).
        radii: Override of the probing radii.

    Returns:
        EquivalenceReport: Max deviation, a point attaining it, and the verdict.

    Raises:
        DimensionMismatchError: If the space dimensions differ or the sampler
            does not emit directions in R^space_dim.
    """
    if first.space_dim != second.space_dim:
        raise DimensionMismatchError("second family", first.space_dim, second.space_dim)
    check_sampler(sampler, first.space_dim, tuple(SamplerMode), "verification")

    limit = config.EXH_TOL if tol is None else tol
    coexhauster = first.kind.is_coexhauster or second.kind.is_coexhauster
    points = probe_points(first.space_dim, sample_directions(sampler), coexhauster, radii)
    first_values = eval_many(first, points)
    second_values = eval_many(second, points)
    # values that overflowed the same way agree; any other non-finite gap fails
    same = (first_values == second_values) | (
        np.isnan(first_values) & np.isnan(second_values)
    )
    with np.errstate(invalid="ignore"):
        deviations = np.where(same, 0.0, np.abs(first_values - second_values))
    deviations[np.isnan(deviations)] = np.inf
    worst = int(np.argmax(deviations))
    max_deviation = float(deviations[worst])

    logger.debug(
        "compared %s and %s on %d points: max deviation %.3g",
        first.kind.value,
        second.kind.value,
        points.shape[0],
        max_deviation,
    )
    return EquivalenceReport(
        max_abs_deviation=max_deviation,
        worst_direction=tuple(float(x) for x in points[worst]),
        directions_tested=points.shape[0],
        tolerance=limit,
        passed=max_deviation <= limit,
    )
