import logging

import networkx as nx
import pytest

from core.graph import Graph


def edges(n: int, pairs) -> Graph:
    return Graph.from_edges(n, pairs)


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


@pytest.fixture
def k2() -> Graph:
    return complete(2)


@pytest.fixture
def p3() -> Graph:
    return path(3)


@pytest.fixture
def c3() -> Graph:
    return cycle(3)


@pytest.fixture
def c4() -> Graph:
    return cycle(4)


@pytest.fixture
def c5() -> Graph:
    return cycle(5)


@pytest.fixture
def star() -> Graph:
    """K_{1,3} centered at 0"""
    return edges(4, [(0, 1), (0, 2), (0, 3)])


@pytest.fixture
def paw() -> Graph:
    """Triangle 0-1-2 with a pendant vertex 3 on 0"""
    return edges(4, [(0, 1), (0, 2), (1, 2), (0, 3)])


@pytest.fixture
def triangle_two_pendants() -> Graph:
    """Triangle 0-1-2, pendant vertices 3 and 4 both attached to 0"""
    return edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4)])


@pytest.fixture
def triangle_pendant_path() -> Graph:
    """Triangle 0-1-2 with the path 0-3-4 hanging from 0"""
    return edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (3, 4)])


@pytest.fixture
def petersen() -> Graph:
    return Graph.from_networkx(nx.petersen_graph())


@pytest.fixture(autouse=True)
def restore_root_logger():
    """config_logger swaps the root handlers; put the originals back after each test"""
    root = logging.getLogger()
    handlers, level = root.handlers[:], root.level
    yield
    root.handlers[:] = handlers
    root.setLevel(level)
