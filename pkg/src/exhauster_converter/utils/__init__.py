"""Exhauster converter utilities package."""

from typing import Final, List
from .errors import (
    CertificateShapeError,
    CombinatorialBlowUpError,
    DimensionMismatchError,
    ExhausterError,
    FamilyFileError,
    InvalidFamilyError,
    SamplerModeError,
)
from .family_io import parse_direction, read_family, write_family
from .sampling import build_sampler, check_sampler, sample_directions

__all__: Final[List[str]] = [
    "ExhausterError",
    "InvalidFamilyError",
    "DimensionMismatchError",
    "SamplerModeError",
    "FamilyFileError",
    "CertificateShapeError",
    "CombinatorialBlowUpError",
    "sample_directions",
    "build_sampler",
    "check_sampler",
    "read_family",
    "write_family",
    "parse_direction",
]
