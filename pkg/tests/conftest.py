"""Shared fixtures: the worked example families and a few small shapes."""

from pathlib import Path

import numpy as np
import pytest

from exhauster_converter.constants import FamilyKind
from exhauster_converter.models import DirectionSampler, Family, Polytope
from exhauster_converter.utils import read_family

FIXTURES = Path(__file__).parent / "fixtures"

SQUARE = [(1.0, 1.0), (1.0, -1.0), (-1.0, -1.0), (-1.0, 1.0)]


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture
def example1() -> Family:
    return read_family(FIXTURES / "example1.json")


@pytest.fixture
def example1_converted() -> Family:
    return read_family(FIXTURES / "example1_converted.json")


@pytest.fixture
def example2() -> Family:
    return read_family(FIXTURES / "example2.json")


@pytest.fixture
def square() -> Polytope:
    return Polytope.from_vertices(SQUARE)


@pytest.fixture
def square_lower(square: Polytope) -> Family:
    return Family.build(FamilyKind.LOWER_EXHAUSTER, 2, [square])


@pytest.fixture
def fresh_sampler_4d() -> DirectionSampler:
    return DirectionSampler(dim=4, count=1000, seed=2024)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(12345)
