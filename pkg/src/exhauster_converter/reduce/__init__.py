"""Post-conversion cleanup: exact duplicate merging and sampled pruning."""

from typing import Final, List

from .dedup import dedup_sets
from .prune import prune_sampled

__all__: Final[List[str]] = [
    "dedup_sets",
    "prune_sampled",
]
