"""Combinatorial conversion of families and the matrix minimax lemmas it rests on."""

from typing import Final, List

from .conversion import (
    certificate_mode,
    conversion_certificate,
    convert_family,
    product_size,
    selections,
)
from .minimax import maxmin, minmax, saddle_column, sides

__all__: Final[List[str]] = [
    "saddle_column",
    "minmax",
    "maxmin",
    "sides",
    "convert_family",
    "conversion_certificate",
    "certificate_mode",
    "product_size",
    "selections",
]
