"""Combinatorial conversion between upper and lower (co)exhausters."""

import itertools
import logging
import math
from typing import Iterator, Optional, Tuple

import numpy as np

from ..config import config
from ..constants import FamilyKind, SupportMode
from ..core import as_points, vertex_values
from ..models import Family, PayoffMatrix, Polytope
from ..reduce import dedup_sets
from ..types import VectorLike
from ..utils.errors import CertificateShapeError, CombinatorialBlowUpError

logger = logging.getLogger(__name__)


def product_size(family: Family) -> int:
    """p = m_1 * m_2 * ... * m_k, the number of sets the conversion emits."""
    return math.prod(family.vertex_counts)


def selections(family: Family) -> Iterator[Tuple[int, ...]]:
    """One vertex index per member set, in lexicographic order of (j_1, ..., j_k)."""
    return itertools.product(*(range(m) for m in family.vertex_counts))


def _selection_polytope(family: Family, selection: Tuple[int, ...]) -> Polytope:
    return Polytope(
        vertices=tuple(
            polytope.vertices[j] for polytope, j in zip(family.sets, selection)
        )
    )


def convert_family(
    family: Family,
    dedup: bool = False,
    cap: Optional[int] = None,
) -> Family:
    """
    Convert an upper family into a lower one or vice versa.

    Every way of picking one vertex from each member set gives one output
    set, the convex hull of the picked vertices. The output represents the
    same function with the dual kind.

    Args:
        family: Family of any kind.
        dedup: Merge output sets with identical canonical vertex lists.
        cap: Largest admissible number of output sets (defaults to EXH_CAP).

    Returns:
        Family: The dual-kind family of exactly p sets (fewer with dedup).

    Raises:
        CombinatorialBlowUpError: If p exceeds the cap.
    """
    limit = config.EXH_CAP if cap is None else cap
    p = product_size(family)
    if p > limit:
        raise CombinatorialBlowUpError(p, limit)

    logger.debug(
        "converting %s with vertex counts %s into %d sets",
        family.kind.value,
        family.vertex_counts,
        p,
    )
    converted = Family.build(
        family.kind.dual,
        family.space_dim,
        [_selection_polytope(family, selection) for selection in selections(family)],
    )
    return dedup_sets(converted) if dedup else converted


def certificate_mode(kind: FamilyKind) -> SupportMode:
    """Saddle mode the certificate of a family of this kind satisfies."""
    return SupportMode.MAX if kind.is_upper else SupportMode.MIN


def conversion_certificate(
    family_in: Family,
    family_out: Family,
    direction: VectorLike,
) -> PayoffMatrix:
    """
    Build the k x p matrix certifying a conversion at one point.

    Row i belongs to input set i, column j to output set j, and d_ij is the
    value at `direction` of the vertex output set j took from input set i.
    Upper inputs always have a MAX saddle column and lower inputs a MIN
    saddle column, and the two sides of the matching minimax equality are
    eval(family_in) and eval(family_out).

    Raises:
        CertificateShapeError: If family_out is not convert_family(family_in).
        DimensionMismatchError: If direction has the wrong length.
    """
    _check_conversion_pair(family_in, family_out)
    point = as_points(direction, family_in.space_dim)
    chosen = np.array(list(selections(family_in)), dtype=np.intp).reshape(
        -1, len(family_in)
    )
    rows = [
        vertex_values(family_in, polytope, point)[:, 0][chosen[:, i]]
        for i, polytope in enumerate(family_in.sets)
    ]
    return PayoffMatrix.from_rows(np.vstack(rows))


def _check_conversion_pair(family_in: Family, family_out: Family) -> None:
    if family_out.kind is not family_in.kind.dual:
        raise CertificateShapeError(
            f"{family_out.kind.value} is not the dual of {family_in.kind.value}"
        )
    if family_out.space_dim != family_in.space_dim:
        raise CertificateShapeError(
            f"space dimensions differ: {family_in.space_dim} vs {family_out.space_dim}"
        )
    p = product_size(family_in)
    if len(family_out) != p:
        raise CertificateShapeError(
            f"expected {p} output sets (conversion without dedup), got {len(family_out)}"
        )
    for j, selection in enumerate(selections(family_in)):
        expected = _selection_polytope(family_in, selection).canonical()
        actual = family_out.sets[j].canonical()
        if expected.shape != actual.shape or not np.allclose(
            expected, actual, rtol=0.0, atol=config.EXH_VERTEX_TOL
        ):
            raise CertificateShapeError(
                f"output set {j} does not match selection {selection}"
            )
