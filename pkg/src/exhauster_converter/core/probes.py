"""Evaluation points used to compare families as functions."""

from typing import Optional, Sequence

import numpy as np

from ..config import config
from ..types import FloatArray


def canonical_probes(space_dim: int) -> FloatArray:
    """The origin, +e_i, -e_i for every axis, and the all-ones vector."""
    eye = np.eye(space_dim, dtype=np.float64)
    return np.vstack(
        [np.zeros((1, space_dim)), eye, -eye, np.ones((1, space_dim))]
    )


def probe_points(
    space_dim: int,
    directions: FloatArray,
    coexhauster: bool,
    radii: Optional[Sequence[float]] = None,
) -> FloatArray:
    """
    Canonical probes plus sampled directions, scaled by every radius.

    Exhauster functions are positively homogeneous, so radius 1 suffices and
    is the default; coexhauster functions default to the configured radii.
    The origin appears exactly once.

    Returns:
        FloatArray: (N, space_dim) array of evaluation points.
    """
    if radii is None:
        radii = config.get_coexhauster_radii() if coexhauster else (1.0,)
    base = np.vstack([canonical_probes(space_dim)[1:], directions.reshape(-1, space_dim)])
    return np.vstack([np.zeros((1, space_dim))] + [base * float(r) for r in radii])
