from pathlib import Path

import pytest

from permpoly.fields.galois_field import field_new

TEST_DATA = Path(__file__).parent / "test_data"


@pytest.fixture
def f5():
    return field_new(5, 1)


@pytest.fixture
def f9():
    return field_new(3, 2)


@pytest.fixture
def f25():
    return field_new(5, 2)


@pytest.fixture
def f81():
    return field_new(3, 4)


@pytest.fixture
def test_data() -> Path:
    return TEST_DATA
