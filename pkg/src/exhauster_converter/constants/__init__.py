from typing import Final, List

from .family_kind import FamilyKind
from .sampler_mode import SamplerMode
from .support_mode import SupportMode
from .exit_codes import ExitCode

__all__ : Final[List[str]] = [
    "FamilyKind",
    "SamplerMode",
    "SupportMode",
    "ExitCode",
]
