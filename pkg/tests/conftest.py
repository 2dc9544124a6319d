import pytest
from hypothesis import settings

from halin.graph import Graph

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


def named(edges: str) -> Graph:
    """Build a graph from a compact string such as ``"ab bc ca"``."""
    return Graph.from_edges((e[0], e[1]) for e in edges.split())


@pytest.fixture
def w5_letters() -> Graph:
    return named("ha hb hc hd ab bc cd da")


@pytest.fixture
def w6_letters() -> Graph:
    return named("ha hb hc hd he ab bc cd de ea")
