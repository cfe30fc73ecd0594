import pytest

from zclass import ff, group


@pytest.fixture(scope="session")
def f9():
    return ff.field_make(3)


@pytest.fixture(scope="session")
def f25():
    return ff.field_make(5)


@pytest.fixture(scope="session")
def f4():
    return ff.field_make(2)


@pytest.fixture(scope="session")
def gl23(f9):
    return group.build_general_linear(2, f9)


@pytest.fixture(scope="session")
def u23(f9):
    return group.build_unitary(2, f9)


@pytest.fixture(scope="session")
def gl29(f9):
    return group.build_general_linear(2, f9, over_extension=True)


@pytest.fixture(scope="session")
def gl33(f9):
    return group.build_general_linear(3, f9)


@pytest.fixture(scope="session")
def u33(f9):
    return group.build_unitary(3, f9)
