"""Support functions and evaluation of exhauster and coexhauster families."""

from typing import Final, List

from .evaluate import (
    as_points,
    combine_sets,
    eval_family,
    eval_many,
    normalize,
    support_table,
    vertex_values,
)
from .probes import canonical_probes, probe_points
from .support import affine_support, affine_values, support_max, support_min

__all__: Final[List[str]] = [
    "support_max",
    "support_min",
    "affine_support",
    "affine_values",
    "eval_family",
    "eval_many",
    "support_table",
    "combine_sets",
    "vertex_values",
    "as_points",
    "normalize",
    "canonical_probes",
    "probe_points",
]
