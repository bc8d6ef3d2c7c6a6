"""Type definitions for vectors, point batches, and vertex arrays."""

from typing import Sequence, Union

import numpy as np
import numpy.typing as npt

FloatArray = npt.NDArray[np.float64]
VectorLike = Union[Sequence[float], FloatArray]
PointsLike = Union[Sequence[Sequence[float]], Sequence[float], FloatArray]
