from fractions import Fraction

import pytest

from occpoly import QuantumSystem, WeightVector, validate_system


@pytest.fixture
def triplet_444() -> QuantumSystem:
    return validate_system(4, 2, 4)


@pytest.fixture
def quartet_737() -> QuantumSystem:
    return validate_system(7, 3, 7)


@pytest.fixture
def w_73() -> WeightVector:
    return WeightVector((Fraction(7, 10), Fraction(3, 10)))
