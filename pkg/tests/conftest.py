import pytest

from vandermerge import field_spec, make_field


@pytest.fixture(scope="session")
def f2():
    return make_field(field_spec(2))


@pytest.fixture(scope="session")
def f4():
    return make_field(field_spec(2, 2))


@pytest.fixture(scope="session")
def f5():
    return make_field(field_spec(5))


@pytest.fixture(scope="session")
def f8():
    return make_field(field_spec(2, 3))


@pytest.fixture(scope="session")
def f16():
    return make_field(field_spec(2, 4))


@pytest.fixture(scope="session")
def f256():
    return make_field(field_spec(2, 8))
