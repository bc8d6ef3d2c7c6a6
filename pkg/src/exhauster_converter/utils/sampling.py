"""Deterministic unit-direction generation for DirectionSampler parameters."""

import numpy as np
from pydantic import ValidationError

from ..config import config
from ..constants import SamplerMode
from ..models import DirectionSampler
from ..types import FloatArray
from .errors import DimensionMismatchError, SamplerModeError


def sample_directions(sampler: DirectionSampler) -> FloatArray:
    """
    Emit the sampler's unit directions.

    Random modes draw Gaussian vectors row by row from
    numpy.random.default_rng(seed) and normalize them, so a sample of c
    directions is a prefix of every larger sample with the same seed. The
    half-sphere mode flips rows whose first coordinate is negative.
    uniform_angles_2d returns (cos 2*pi*k/count, sin 2*pi*k/count). Every
    row has unit norm within EXH_NORM_TOL.

    Returns:
        FloatArray: (count, dim) array of unit rows.

    Raises:
        SamplerModeError: If rows cannot be brought within EXH_NORM_TOL of
            unit norm.
    """
    if sampler.count == 0:
        return np.zeros((0, sampler.dim), dtype=np.float64)

    if sampler.mode is SamplerMode.UNIFORM_ANGLES_2D:
        angles = 2.0 * np.pi * np.arange(sampler.count, dtype=np.float64) / sampler.count
        return _unit_rows(np.column_stack([np.cos(angles), np.sin(angles)]))

    rng = np.random.default_rng(sampler.seed)
    raw = rng.standard_normal(size=(sampler.count, sampler.dim))
    norms = np.linalg.norm(raw, axis=1)
    degenerate = norms == 0.0
    if degenerate.any():
        raw[degenerate] = 0.0
        raw[degenerate, 0] = 1.0
        norms[degenerate] = 1.0
    directions = raw / norms[:, None]
    if sampler.mode is SamplerMode.HALF_SPHERE_FIRST_COORD_NONNEG:
        directions[directions[:, 0] < 0.0] *= -1.0
    return _unit_rows(directions)


def _unit_rows(directions: FloatArray) -> FloatArray:
    tol = config.EXH_NORM_TOL
    off = np.abs(np.linalg.norm(directions, axis=1) - 1.0) > tol
    if off.any():
        directions[off] /= np.linalg.norm(directions[off], axis=1, keepdims=True)
        off = np.abs(np.linalg.norm(directions, axis=1) - 1.0) > tol
    if off.any():
        raise SamplerModeError(
            f"{int(off.sum())} sampled directions are not unit vectors within "
            f"EXH_NORM_TOL={tol!r}",
            details={"norm_tol": tol},
        )
    return directions


def build_sampler(dim: int, count: int, seed: int, mode: SamplerMode) -> DirectionSampler:
    """
    Construct a DirectionSampler from command line values.

    Raises:
        SamplerModeError: If the combination is rejected (uniform angles off the plane).
    """
    try:
        return DirectionSampler(dim=dim, count=count, seed=seed, mode=mode)
    except ValidationError as e:
        raise SamplerModeError(
            f"Invalid sampler: {e.errors()[0]['msg']}",
            details={"dim": dim, "count": count, "mode": mode.value},
        ) from e


def check_sampler(
    sampler: DirectionSampler,
    expected_dim: int,
    allowed: tuple[SamplerMode, ...],
    context: str,
) -> None:
    """
    Validate a sampler against the context it is about to be used in.

    Raises:
        DimensionMismatchError: If sampler.dim != expected_dim.
        SamplerModeError: If sampler.mode is not one of `allowed`.
    """
    if sampler.dim != expected_dim:
        raise DimensionMismatchError(f"{context} sampler", expected_dim, sampler.dim)
    if sampler.mode not in allowed:
        names = ", ".join(mode.value for mode in allowed)
        raise SamplerModeError(
            f"{context} needs a sampler in mode {names}, got {sampler.mode.value}"
        )
