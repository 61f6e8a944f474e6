import pathlib

import pytest

from mcflow import parse_network

DATA = pathlib.Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def golden_text() -> str:
    return (DATA / "two_commodity.net").read_text()


@pytest.fixture(scope="session")
def golden_net(golden_text):
    return parse_network(golden_text)


@pytest.fixture(scope="session")
def disjoint_text() -> str:
    return (DATA / "disjoint.net").read_text()


@pytest.fixture(scope="session")
def disjoint_net(disjoint_text):
    return parse_network(disjoint_text)


@pytest.fixture(scope="session")
def single_edge_text() -> str:
    return (DATA / "single_edge.net").read_text()
