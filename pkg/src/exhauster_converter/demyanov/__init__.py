"""Sampled classical converter, an independent cross-check of the combinatorial one."""

from typing import Final, List

from ..utils.sampling import sample_directions
from .classical import demyanov_convert

__all__: Final[List[str]] = [
    "demyanov_convert",
    "sample_directions",
]
