import pytest

from hopflab.fields import FieldSpec


@pytest.fixture(scope="session")
def Q():
    return FieldSpec.rationals()


@pytest.fixture(scope="session")
def F2():
    return FieldSpec.prime(2)


@pytest.fixture(scope="session")
def F3():
    return FieldSpec.prime(3)


@pytest.fixture(scope="session")
def F5():
    return FieldSpec.prime(5)
