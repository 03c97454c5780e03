import pytest

from ksets import build_600cell


@pytest.fixture(scope="session")
def cell600():
    return build_600cell()


@pytest.fixture(scope="session")
def h75(cell600):
    return cell600.hypergraph
