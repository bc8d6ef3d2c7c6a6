import math
from typing import Annotated, Sequence, Tuple, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator

from ...types import FloatArray


class PayoffMatrix(BaseModel):
    """A dense k x p real matrix D = {d_ij}."""

    model_config = ConfigDict(frozen=True)

    entries: Annotated[
        Tuple[Tuple[float, ...], ...],
        Field(
            description="Row-major entries; k rows of p finite reals",
            examples=[[[1.0, 2.0], [0.0, 3.0]]],
        ),
    ]

    @field_validator("entries")
    @classmethod
    def _validate_entries(
        cls, value: Tuple[Tuple[float, ...], ...]
    ) -> Tuple[Tuple[float, ...], ...]:
        if not value or not value[0]:
            raise ValueError("a payoff matrix needs at least one row and one column")
        cols = len(value[0])
        for row in value:
            if len(row) != cols:
                raise ValueError("all rows of a payoff matrix must have equal length")
            if not all(math.isfinite(x) for x in row):
                raise ValueError("payoff matrix entries must be finite")
        return value

    @classmethod
    def from_rows(
        cls, rows: Union[Sequence[Sequence[float]], FloatArray]
    ) -> "PayoffMatrix":
        return cls(entries=tuple(tuple(float(x) for x in row) for row in rows))

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    def as_array(self) -> FloatArray:
        return np.asarray(self.entries, dtype=np.float64)
