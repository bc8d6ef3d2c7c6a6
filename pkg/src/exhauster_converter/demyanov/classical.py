"""Direction-sampled version of the classical converting procedure."""

import logging
from typing import List, Optional

import numpy as np

from ..config import config
from ..constants import SamplerMode
from ..models import DirectionSampler, Family, Polytope
from ..reduce import dedup_sets
from ..utils.errors import InvalidFamilyError
from ..utils.sampling import check_sampler, sample_directions

logger = logging.getLogger(__name__)

_EXHAUSTER_MODES = (SamplerMode.FULL_SPHERE, SamplerMode.UNIFORM_ANGLES_2D)
_COEXHAUSTER_MODES = (SamplerMode.HALF_SPHERE_FIRST_COORD_NONNEG,)


def demyanov_convert(
    family: Family,
    sampler: DirectionSampler,
    active_tol: Optional[float] = None,
) -> Family:
    """
    Convert a family by collecting active vertices along sampled directions.

    For each direction g every member set contributes the vertices that
    minimize <w, g> (lower input) or maximize it (upper input), up to
    `active_tol`; their convex hull is one output set. Coexhauster vertices
    [a, v] are paired with g in R^(n+1) as a whole, so g needs g_1 >= 0.

    The output is exact at the sampled directions and one-sided elsewhere:
    a converted lower family never undershoots the input, a converted upper
    family never overshoots it. Duplicate output sets are merged, keeping
    sampler order.

    Raises:
        DimensionMismatchError: If sampler.dim is not n (exhausters) or n+1
            (coexhausters).
        SamplerModeError: If the mode does not fit the family kind.
        InvalidFamilyError: If the sampler emits no directions.
    """
    coexhauster = family.kind.is_coexhauster
    check_sampler(
        sampler,
        family.kind.vertex_dim(family.space_dim),
        _COEXHAUSTER_MODES if coexhauster else _EXHAUSTER_MODES,
        "classical conversion",
    )
    if sampler.count == 0:
        raise InvalidFamilyError("classical conversion needs at least one direction")

    tol = config.EXH_ACTIVE_TOL if active_tol is None else active_tol
    directions = sample_directions(sampler)
    arrays = [polytope.as_array() for polytope in family.sets]
    values = [vertices @ directions.T for vertices in arrays]
    if family.kind.is_upper:
        masks = [v >= v.max(axis=0) - tol for v in values]
    else:
        masks = [v <= v.min(axis=0) + tol for v in values]

    sets: List[Polytope] = []
    for s in range(directions.shape[0]):
        active = np.vstack(
            [vertices[mask[:, s]] for vertices, mask in zip(arrays, masks)]
        )
        sets.append(Polytope.from_vertices(active))

    converted = dedup_sets(Family.build(family.kind.dual, family.space_dim, sets))
    logger.debug(
        "classical conversion: %d directions gave %d distinct sets",
        directions.shape[0],
        len(converted),
    )
    return converted
