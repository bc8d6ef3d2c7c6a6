import math

import numpy as np
import pytest

from exhauster_converter.constants import FamilyKind, SupportMode
from exhauster_converter.convert import (
    certificate_mode,
    conversion_certificate,
    convert_family,
    maxmin,
    minmax,
    product_size,
    saddle_column,
    sides,
)
from exhauster_converter.core import eval_family, eval_many
from exhauster_converter.models import DirectionSampler, Family, Polytope
from exhauster_converter.utils import sample_directions
from exhauster_converter.utils.errors import (
    CertificateShapeError,
    CombinatorialBlowUpError,
)
from exhauster_converter.verify import check_equivalence, random_family

SEEDS = range(50)


def shape_for(seed: int) -> tuple[int, int]:
    return 1 + seed % 4, 1 + seed % 3


def canonical_sets(family: Family) -> list[list[list[float]]]:
    return [polytope.canonical().tolist() for polytope in family.sets]


class TestWorkedExamples:
    def test_example1_gives_the_listed_upper_exhauster(self, example1, example1_converted):
        converted = convert_family(example1)
        assert converted.kind is FamilyKind.UPPER_EXHAUSTER
        assert len(converted) == 4
        assert canonical_sets(converted) == canonical_sets(example1_converted)

    def test_example2_gives_three_segments_to_the_origin(self, example2):
        converted = convert_family(example2)
        assert converted.kind is FamilyKind.LOWER_COEXHAUSTER
        expected = [
            Polytope.from_vertices([np.r_[1.0, np.eye(4)[i]], np.zeros(5)]).canonical().tolist()
            for i in range(3)
        ]
        assert canonical_sets(converted) == expected

    def test_square_becomes_its_vertices(self, square_lower, square):
        converted = convert_family(square_lower)
        assert converted.kind is FamilyKind.UPPER_EXHAUSTER
        assert [p.vertices for p in converted.sets] == [(v,) for v in square.vertices]
        angles = np.linspace(0, 2 * np.pi, 73)
        grid = np.column_stack([np.cos(angles), np.sin(angles)]) * 3
        np.testing.assert_array_equal(
            eval_many(converted, grid), eval_many(square_lower, grid)
        )


class TestConvertFamily:
    def test_order_is_lexicographic_in_selections(self):
        family = Family.build(
            FamilyKind.UPPER_EXHAUSTER,
            1,
            [Polytope.from_vertices([[1], [2]]), Polytope.from_vertices([[10], [20], [30]])],
        )
        converted = convert_family(family)
        assert [p.vertices for p in converted.sets] == [
            ((1.0,), (10.0,)),
            ((1.0,), (20.0,)),
            ((1.0,), (30.0,)),
            ((2.0,), (10.0,)),
            ((2.0,), (20.0,)),
            ((2.0,), (30.0,)),
        ]

    def test_singleton_family_is_its_own_conversion(self):
        family = Family.build(
            FamilyKind.LOWER_COEXHAUSTER, 2, [Polytope.from_vertices([[0.5, 1, -1]])]
        )
        converted = convert_family(family)
        assert converted.kind is FamilyKind.UPPER_COEXHAUSTER
        assert converted.sets == family.sets

    def test_cap_exceeded(self, example1):
        with pytest.raises(CombinatorialBlowUpError) as info:
            convert_family(example1, cap=3)
        assert info.value.p == 4
        assert info.value.cap == 3
        assert "p=4" in str(info.value)
        assert int(info.value.exit_code) == 3

    def test_dedup_merges_coinciding_outputs(self):
        shared = Polytope.from_vertices([[1, 0], [0, 1]])
        family = Family.build(FamilyKind.UPPER_EXHAUSTER, 2, [shared, shared])
        plain = convert_family(family)
        merged = convert_family(family, dedup=True)
        # (0,1) and (1,0) pick the same two vertices; (0,0) and (1,1) collapse to points
        assert len(plain) == 4
        assert len(merged) == 3
        assert [len(p.vertices) for p in plain.sets] == [1, 2, 2, 1]

    def test_double_conversion_restores_the_kind(self, example1):
        twice = convert_family(convert_family(example1))
        assert twice.kind is example1.kind


@pytest.mark.parametrize("kind", list(FamilyKind))
def test_random_families_convert_to_equivalent_families(kind):
    for seed in SEEDS:
        n, k = shape_for(seed)
        family = random_family(n, k, 4, kind, seed)
        converted = convert_family(family)
        assert len(converted) == math.prod(family.vertex_counts) == product_size(family)
        assert all(len(p.vertices) <= k for p in converted.sets)
        sampler = DirectionSampler(dim=n, count=1000, seed=10_000 + seed)
        report = check_equivalence(family, converted, sampler, tol=1e-9)
        assert report.passed, (seed, report)


@pytest.mark.parametrize("kind", list(FamilyKind))
def test_double_conversion_preserves_values(kind):
    for seed in range(20):
        n = 1 + seed % 4
        family = random_family(n, 2, 3, kind, seed)
        twice = convert_family(convert_family(family, dedup=True))
        sampler = DirectionSampler(dim=n, count=1000, seed=500 + seed)
        assert check_equivalence(family, twice, sampler, tol=1e-9).passed


class TestCertificate:
    def test_example1(self, example1):
        converted = convert_family(example1)
        matrix = conversion_certificate(example1, converted, [1, 0, 0, 0])
        assert (matrix.rows, matrix.cols) == (2, 4)
        assert matrix.entries == ((-1.0, -1.0, 1.0, 1.0), (1.0, -1.0, 1.0, -1.0))
        assert certificate_mode(example1.kind) is SupportMode.MIN
        assert saddle_column(matrix, SupportMode.MIN) == 1
        assert sides(matrix, SupportMode.MIN) == (-1.0, -1.0)

    def test_zero_direction_gives_zero_matrix(self, example1):
        converted = convert_family(example1)
        matrix = conversion_certificate(example1, converted, np.zeros(4))
        assert not matrix.as_array().any()
        assert saddle_column(matrix, SupportMode.MAX) == 0
        assert minmax(matrix) == maxmin(matrix) == 0.0

    @pytest.mark.parametrize("kind", list(FamilyKind))
    def test_random_certificates_are_saddled(self, kind):
        for seed in SEEDS:
            n, k = shape_for(seed)
            family = random_family(n, k, 4, kind, seed)
            converted = convert_family(family)
            mode = certificate_mode(kind)
            directions = sample_directions(DirectionSampler(dim=n, count=10, seed=seed))
            for direction in directions * 2.0:
                matrix = conversion_certificate(family, converted, direction)
                assert matrix.rows == k
                assert matrix.cols == len(converted)
                assert saddle_column(matrix, mode) is not None
                row_side, column_side = sides(matrix, mode)
                assert row_side == pytest.approx(column_side, abs=1e-12)
                assert row_side == pytest.approx(eval_family(family, direction), abs=1e-12)
                assert column_side == pytest.approx(
                    eval_family(converted, direction), abs=1e-12
                )

    def test_upper_random_family_in_r3(self):
        family = random_family(3, 2, 4, FamilyKind.UPPER_EXHAUSTER, seed=99)
        converted = convert_family(family)
        matrix = conversion_certificate(family, converted, [0.3, -1.2, 0.7])
        assert saddle_column(matrix, SupportMode.MAX) is not None
        assert minmax(matrix) == maxmin(matrix)

    def test_rejects_non_conversion_pairs(self, example1, example1_converted):
        with pytest.raises(CertificateShapeError, match="dual"):
            conversion_certificate(example1, example1, np.ones(4))
        reordered = Family.build(
            FamilyKind.UPPER_EXHAUSTER, 4, list(reversed(example1_converted.sets))
        )
        with pytest.raises(CertificateShapeError, match="does not match"):
            conversion_certificate(example1, reordered, np.ones(4))
        deduped = Family.build(FamilyKind.UPPER_EXHAUSTER, 4, example1_converted.sets[:3])
        with pytest.raises(CertificateShapeError, match="expected 4"):
            conversion_certificate(example1, deduped, np.ones(4))
