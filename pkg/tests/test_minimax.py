import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from exhauster_converter.constants import SupportMode
from exhauster_converter.convert import maxmin, minmax, saddle_column, sides
from exhauster_converter.models import PayoffMatrix


def matrices(max_side: int = 6) -> st.SearchStrategy[PayoffMatrix]:
    entry = st.floats(min_value=-100, max_value=100, allow_nan=False, allow_infinity=False)
    return st.integers(1, max_side).flatmap(
        lambda cols: st.lists(
            st.lists(entry, min_size=cols, max_size=cols), min_size=1, max_size=max_side
        )
    ).map(PayoffMatrix.from_rows)


class TestSaddleColumn:
    def test_max_column_exists(self):
        assert saddle_column(PayoffMatrix.from_rows([[1, 2], [0, 3]]), SupportMode.MAX) == 1

    def test_max_column_missing(self):
        assert saddle_column(PayoffMatrix.from_rows([[1, 0], [0, 1]]), SupportMode.MAX) is None

    @pytest.mark.parametrize("which", list(SupportMode))
    def test_single_entry(self, which):
        assert saddle_column(PayoffMatrix.from_rows([[7.5]]), which) == 0

    def test_min_column(self):
        matrix = PayoffMatrix.from_rows([[1, 2], [0, 3]])
        assert saddle_column(matrix, SupportMode.MIN) == 0

    def test_ties_pick_smallest_index(self):
        matrix = PayoffMatrix.from_rows([[1, 5, 5], [2, 4, 4]])
        assert saddle_column(matrix, SupportMode.MAX) == 1
        matrix = PayoffMatrix.from_rows([[5, 5, 1], [4, 4, 2]])
        assert saddle_column(matrix, SupportMode.MAX) == 0


class TestMinimaxValues:
    def test_saddled_matrix(self):
        matrix = PayoffMatrix.from_rows([[1, 2], [0, 3]])
        assert minmax(matrix) == 2.0
        assert maxmin(matrix) == 2.0

    def test_duality_gap(self):
        matrix = PayoffMatrix.from_rows([[1, 0], [0, 1]])
        assert minmax(matrix) == 1.0
        assert maxmin(matrix) == 0.0

    def test_single_entry(self):
        matrix = PayoffMatrix.from_rows([[-4.25]])
        assert minmax(matrix) == maxmin(matrix) == -4.25

    def test_sides_with_min_saddle(self):
        matrix = PayoffMatrix.from_rows([[1, 2], [0, 3]])
        assert sides(matrix, SupportMode.MIN) == (1.0, 1.0)
        assert sides(matrix, SupportMode.MAX) == (minmax(matrix), maxmin(matrix))


@given(matrices())
@settings(max_examples=300)
def test_weak_duality(matrix):
    assert minmax(matrix) >= maxmin(matrix)
    row_side, column_side = sides(matrix, SupportMode.MIN)
    assert row_side <= column_side


@given(matrices())
@settings(max_examples=300)
def test_saddle_column_forces_equality(matrix):
    for which in SupportMode:
        if saddle_column(matrix, which) is not None:
            row_side, column_side = sides(matrix, which)
            assert row_side == column_side


def test_seeded_random_matrices():
    rng = np.random.default_rng(20240601)
    saddled = 0
    for _ in range(10_000):
        k, p = rng.integers(1, 7, size=2)
        # small integer entries make saddle columns common enough to matter
        matrix = PayoffMatrix.from_rows(rng.integers(-3, 4, size=(k, p)).astype(float))
        assert minmax(matrix) >= maxmin(matrix)
        column = saddle_column(matrix, SupportMode.MAX)
        if column is not None:
            saddled += 1
            assert minmax(matrix) == maxmin(matrix)
            entries = matrix.as_array()
            assert (entries[:, column] == entries.max(axis=1)).all()
        if saddle_column(matrix, SupportMode.MIN) is not None:
            row_side, column_side = sides(matrix, SupportMode.MIN)
            assert row_side == column_side
    assert saddled > 100
