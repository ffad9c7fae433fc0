import random
from pathlib import Path

import pytest

from wordrep.graphs import Graph, parse_graph6

DATA = Path(__file__).parent / "data"


def data_file(n: int) -> Path:
    return DATA / f"connected_n{n}.g6"


def connected_lines(n: int):
    """graph6 lines of all connected graphs on n vertices, one per iso class."""
    path = data_file(n)
    if not path.exists():
        pytest.skip(f"fixture {path.name} not generated (tools/gen_connected_g6.py)")
    return path.read_text().split()


def connected_graphs(n: int):
    return [parse_graph6(line) for line in connected_lines(n)]


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    edges = [
        (u, v)
        for u in range(1, n + 1)
        for v in range(u + 1, n + 1)
        if rng.random() < p
    ]
    return Graph.from_edges(n, edges)


@pytest.fixture
def rng():
    return random.Random(20260824)
