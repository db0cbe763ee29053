import pytest

from dihedral.fields import FieldSpec, make_field


@pytest.fixture(scope="session")
def F3():
    return make_field(FieldSpec.prime_closure(3))


@pytest.fixture(scope="session")
def F5():
    return make_field(FieldSpec.prime_closure(5))


@pytest.fixture(scope="session")
def F7():
    return make_field(FieldSpec.prime_closure(7))


@pytest.fixture(scope="session")
def F101():
    return make_field(FieldSpec.prime_closure(101))


@pytest.fixture(scope="session")
def Q():
    return make_field(FieldSpec.rationals())
