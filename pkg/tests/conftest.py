import random

import networkx as nx
import pytest

from model.graph import Graph, graph_from_edges
from shared.utility import Utility


def as_networkx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def from_networkx(h: nx.Graph) -> Graph:
    index = {v: i for i, v in enumerate(h.nodes())}
    return graph_from_edges(h.number_of_nodes(), [(index[u], index[v]) for u, v in h.edges()])


def atlas_graph6(n: int, connected_only: bool = False) -> list[str]:
    """graph6 of every graph on n <= 7 vertices from the networkx atlas, in atlas order."""
    return [
        nx.to_graph6_bytes(h, header=False).decode().strip()
        for h in nx.graph_atlas_g()
        if h.number_of_nodes() == n and (not connected_only or nx.is_connected(h))
    ]


@pytest.fixture
def to_nx():
    return as_networkx


@pytest.fixture
def from_nx():
    return from_networkx


@pytest.fixture(scope="session")
def atlas():
    return atlas_graph6


@pytest.fixture
def random_connected():
    """Seeded stream of random connected graphs."""
    def sample(count: int, max_order: int, seed: int = 2024, min_order: int = 2):
        rng = random.Random(seed)
        for _ in range(count):
            n = rng.randint(min_order, max_order)
            yield Utility.random_connected_graph(n, rng.uniform(0.05, 0.6), rng)
    return sample
