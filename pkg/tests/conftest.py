import pytest
from hypothesis import settings as hypothesis_settings

from src.models.graph import Graph
from src.services.graph_ops import graph_from_edges

hypothesis_settings.register_profile("toolkit", deadline=None, max_examples=60)
hypothesis_settings.load_profile("toolkit")


@pytest.fixture
def square() -> Graph:
    return graph_from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
