import pytest

from shelfhom.census import enumerate_shelf_tables, enumerate_shelves


@pytest.fixture(scope="session")
def labelled_by_size():
    """All labelled shelf tables for carriers 1..3."""
    return {n: enumerate_shelf_tables(n) for n in (1, 2, 3)}


@pytest.fixture(scope="session")
def classes3():
    return enumerate_shelves(3)


@pytest.fixture(scope="session")
def classes4():
    return enumerate_shelves(4)
