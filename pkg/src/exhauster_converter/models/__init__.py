"""Pydantic models for polytopes, families, matrices, samplers and reports."""
from typing import Final, List

from .families.family_model import Family
from .matrices.payoff_matrix_model import PayoffMatrix
from .polytopes.polytope_model import Polytope
from .reports.equivalence_report_model import EquivalenceReport
from .samplers.direction_sampler_model import DirectionSampler

__all__: Final[List[str]] = [
    "Polytope",
    "Family",
    "PayoffMatrix",
    "DirectionSampler",
    "EquivalenceReport",
]
