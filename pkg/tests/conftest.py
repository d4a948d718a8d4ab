import pytest

from kummerwit.base_algebra import field_ctx


@pytest.fixture(scope="session")
def f3():
    return field_ctx(3, 1)


@pytest.fixture(scope="session")
def f7():
    return field_ctx(7, 1)


@pytest.fixture(scope="session")
def f9():
    return field_ctx(3, 2)


@pytest.fixture(scope="session")
def f13():
    return field_ctx(13, 1)
