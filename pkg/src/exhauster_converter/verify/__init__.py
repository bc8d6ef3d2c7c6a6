"""Equivalence oracle and random-family generation."""

from typing import Final, List

from .equivalence import check_equivalence
from .random_family import random_family

__all__: Final[List[str]] = [
    "check_equivalence",
    "random_family",
]
