"""Seeded random families for property tests and the gen command."""

import numpy as np

from ..constants import FamilyKind
from ..core import normalize as normalize_family
from ..models import Family, Polytope
from ..utils.errors import InvalidFamilyError


def random_family(
    n: int,
    k: int,
    max_vertices: int,
    kind: FamilyKind,
    seed: int,
    normalize: bool = False,
) -> Family:
    """
    Generate a deterministic random family.

    Each of the k sets gets between 1 and max_vertices vertices (drawn
    uniformly) with coordinates uniform in [-1, 1]. Coexhauster vertices have
    length n+1.

    Args:
        n: Space dimension.
        k: Number of sets.
        max_vertices: Upper bound on vertices per set.
        kind: Family kind.
        seed: Seed for numpy.random.default_rng.
        normalize: Shift coexhauster constants so eval at the origin is 0.

    Raises:
        InvalidFamilyError: If n, k or max_vertices is below 1.
    """
    if min(n, k, max_vertices) < 1:
        raise InvalidFamilyError(
            f"n, k and max_vertices must be >= 1 (got n={n}, k={k}, "
            f"max_vertices={max_vertices})"
        )
    rng = np.random.default_rng(seed)
    dim = kind.vertex_dim(n)
    sets = []
    for _ in range(k):
        count = int(rng.integers(1, max_vertices, endpoint=True))
        sets.append(Polytope.from_vertices(rng.uniform(-1.0, 1.0, size=(count, dim))))
    family = Family.build(kind, n, sets)
    return normalize_family(family) if normalize else family
