from typing import Annotated, Tuple

from pydantic import BaseModel, ConfigDict, Field, NonNegativeFloat, NonNegativeInt, model_validator


class EquivalenceReport(BaseModel):
    """Outcome of comparing two families as functions on a set of probe points."""

    model_config = ConfigDict(frozen=True)

    max_abs_deviation: Annotated[
        NonNegativeFloat,
        Field(description="Largest |eval(F1, x) - eval(F2, x)| over the probe points"),
    ]
    worst_direction: Annotated[
        Tuple[float, ...],
        Field(description="A probe point attaining max_abs_deviation"),
    ]
    directions_tested: Annotated[
        NonNegativeInt,
        Field(description="Number of probe points evaluated"),
    ]
    tolerance: Annotated[
        NonNegativeFloat,
        Field(description="Deviation allowed for the families to count as equal"),
    ]
    passed: Annotated[
        bool,
        Field(description="True iff max_abs_deviation <= tolerance"),
    ]

    @model_validator(mode="after")
    def _check_verdict(self) -> "EquivalenceReport":
        if self.passed != (self.max_abs_deviation <= self.tolerance):
            raise ValueError("passed must equal max_abs_deviation <= tolerance")
        return self
