import math
from typing import Annotated, Sequence, Tuple, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator

from ...config import config
from ...types import FloatArray, VectorLike

Vertex = Tuple[float, ...]


class Polytope(BaseModel):
    """
    A convex polytope in vertex representation.

    Generator points need not be extreme; vertices closer than the
    configured vertex tolerance are merged at construction, keeping the
    first occurrence.
    """

    model_config = ConfigDict(frozen=True)

    vertices: Annotated[
        Tuple[Vertex, ...],
        Field(
            description=(
                "Generating points of the polytope. For coexhauster families "
                "the affine constant comes first: [a, v1, ..., vn]."
            ),
            examples=[[[-1.0, 1.0, 1.0, 1.0], [1.0, 1.0, 1.0, 1.0]]],
        ),
    ]

    @field_validator("vertices")
    @classmethod
    def _validate_vertices(cls, value: Tuple[Vertex, ...]) -> Tuple[Vertex, ...]:
        if not value:
            raise ValueError("a polytope needs at least one vertex")
        dim = len(value[0])
        if dim == 0:
            raise ValueError("vertices must have positive length")
        for vertex in value:
            if len(vertex) != dim:
                raise ValueError(
                    f"all vertices must have length {dim}, got one of length {len(vertex)}"
                )
            if not all(math.isfinite(x) for x in vertex):
                raise ValueError(f"vertex {list(vertex)} has non-finite coordinates")
        return _dedup_vertices(value, config.EXH_VERTEX_TOL)

    @classmethod
    def from_vertices(
        cls, vertices: Union[Sequence[VectorLike], FloatArray]
    ) -> "Polytope":
        """Build a polytope from any nested sequence or 2-D array of coordinates."""
        return cls(vertices=tuple(tuple(float(x) for x in row) for row in vertices))

    @property
    def dim(self) -> int:
        return len(self.vertices[0])

    def as_array(self) -> FloatArray:
        """Vertices as an (m, dim) float array."""
        return np.asarray(self.vertices, dtype=np.float64)

    def canonical(self) -> FloatArray:
        """Vertices sorted lexicographically, the form used to compare sets."""
        array = self.as_array()
        order = np.lexsort(array.T[::-1])
        return array[order]


def _dedup_vertices(vertices: Tuple[Vertex, ...], tol: float) -> Tuple[Vertex, ...]:
    kept: list[Vertex] = []
    for vertex in vertices:
        if not any(
            max(abs(a - b) for a, b in zip(vertex, other)) <= tol for other in kept
        ):
            kept.append(vertex)
    return tuple(kept)
