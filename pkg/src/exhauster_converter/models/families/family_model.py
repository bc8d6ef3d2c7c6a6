from typing import Annotated, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field, PositiveInt, model_validator

from ...constants import FamilyKind
from ..polytopes.polytope_model import Polytope


class Family(BaseModel):
    """
    A finite family of polytopes standing for one of the four representations.

    Upper kinds are read as min over sets of max over the set, lower kinds as
    max over sets of min over the set. Coexhauster members live in R^(n+1)
    with the affine constant as first coordinate.
    """

    model_config = ConfigDict(frozen=True)

    kind: Annotated[
        FamilyKind,
        Field(
            description="Which representation the family encodes",
            examples=["lower_exhauster"],
        ),
    ]
    space_dim: Annotated[
        PositiveInt,
        Field(description="Dimension n of the argument of the represented function"),
    ]
    sets: Annotated[
        Tuple[Polytope, ...],
        Field(description="Member polytopes, in order", min_length=1),
    ]

    @model_validator(mode="after")
    def _check_member_dims(self) -> "Family":
        expected = self.kind.vertex_dim(self.space_dim)
        for index, polytope in enumerate(self.sets):
            if polytope.dim != expected:
                raise ValueError(
                    f"set {index} has vertices of length {polytope.dim}; a "
                    f"{self.kind.value} over R^{self.space_dim} needs length {expected}"
                )
        return self

    @classmethod
    def build(
        cls,
        kind: FamilyKind,
        space_dim: int,
        sets: Sequence[Polytope],
    ) -> "Family":
        return cls(kind=kind, space_dim=space_dim, sets=tuple(sets))

    @property
    def vertex_counts(self) -> Tuple[int, ...]:
        return tuple(len(polytope.vertices) for polytope in self.sets)

    def __len__(self) -> int:
        return len(self.sets)
