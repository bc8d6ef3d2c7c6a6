from typing import Annotated

from pydantic import BaseModel, ConfigDict, Field, NonNegativeInt, PositiveInt, model_validator

from ...constants import SamplerMode


class DirectionSampler(BaseModel):
    """
    Parameters of a deterministic generator of unit directions.

    The same (dim, count, seed, mode) always yields the same directions, and
    for the random modes the first c directions of a larger sample equal a
    sample of size c.
    """

    model_config = ConfigDict(frozen=True)

    dim: Annotated[PositiveInt, Field(description="Length of each direction")]
    count: Annotated[
        NonNegativeInt, Field(description="Number of directions to emit")
    ]
    seed: Annotated[
        int,
        Field(description="Seed for numpy.random.default_rng; ignored for uniform angles"),
    ] = 42
    mode: Annotated[
        SamplerMode,
        Field(description="Spread of the directions over the unit sphere"),
    ] = SamplerMode.FULL_SPHERE

    @model_validator(mode="after")
    def _check_mode(self) -> "DirectionSampler":
        if self.mode is SamplerMode.UNIFORM_ANGLES_2D and self.dim != 2:
            raise ValueError("uniform_angles_2d directions only exist for dim=2")
        return self
