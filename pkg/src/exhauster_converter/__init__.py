"""Exhauster Converter - evaluate and convert exhausters and coexhausters."""

from typing import Final, List

__version__: Final[str] = "0.1.0"
__description__: Final[str] = (
    "Evaluate and convert exhausters and coexhausters of polytopes"
)

from .constants import FamilyKind, SamplerMode, SupportMode  # noqa: E402
from .convert import conversion_certificate, convert_family  # noqa: E402
from .core import eval_family, eval_many  # noqa: E402
from .demyanov import demyanov_convert  # noqa: E402
from .models import (  # noqa: E402
    DirectionSampler,
    EquivalenceReport,
    Family,
    PayoffMatrix,
    Polytope,
)
from .reduce import dedup_sets, prune_sampled  # noqa: E402
from .verify import check_equivalence, random_family  # noqa: E402

__all__: Final[List[str]] = [
    "FamilyKind",
    "SamplerMode",
    "SupportMode",
    "Polytope",
    "Family",
    "PayoffMatrix",
    "DirectionSampler",
    "EquivalenceReport",
    "eval_family",
    "eval_many",
    "convert_family",
    "conversion_certificate",
    "demyanov_convert",
    "dedup_sets",
    "prune_sampled",
    "check_equivalence",
    "random_family",
]
