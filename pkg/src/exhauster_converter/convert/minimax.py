"""Min-max quantities of payoff matrices and the saddle-column condition."""

from typing import Optional, Tuple

import numpy as np

from ..constants import SupportMode
from ..models import PayoffMatrix


def saddle_column(matrix: PayoffMatrix, which: SupportMode) -> Optional[int]:
    """
    Find a column holding every row's maximum (or minimum).

    Args:
        matrix: The payoff matrix D.
        which: MAX looks for j with d_ij = max_j d_ij for all rows i,
            MIN for d_ij = min_j d_ij.

    Returns:
        Optional[int]: The smallest such 0-based column index, or None.
    """
    entries = matrix.as_array()
    if which is SupportMode.MAX:
        row_extremes = entries.max(axis=1, keepdims=True)
    else:
        row_extremes = entries.min(axis=1, keepdims=True)
    # max/min return one of the entries, so exact equality is safe here
    candidates = np.flatnonzero((entries == row_extremes).all(axis=0))
    return int(candidates[0]) if candidates.size else None


def minmax(matrix: PayoffMatrix) -> float:
    """min over rows i of max over columns j of d_ij."""
    return float(matrix.as_array().max(axis=1).min())


def maxmin(matrix: PayoffMatrix) -> float:
    """max over columns j of min over rows i of d_ij."""
    return float(matrix.as_array().min(axis=0).max())


def sides(matrix: PayoffMatrix, which: SupportMode) -> Tuple[float, float]:
    """
    The two quantities a saddle column forces to be equal.

    With a MAX saddle column, min_i max_j d_ij = max_j min_i d_ij; with a MIN
    saddle column, max_i min_j d_ij = min_j max_i d_ij. The first element is
    always the row-wise side.
    """
    if which is SupportMode.MAX:
        return minmax(matrix), maxmin(matrix)
    entries = matrix.as_array()
    return float(entries.min(axis=1).max()), float(entries.max(axis=0).min())
