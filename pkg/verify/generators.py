"""Seeded random graph families: Pruefer trees, unicyclic graphs, G(n, p), trees plus random chords"""
import heapq
import logging

import numpy as np

from core.graph import Graph
from utils.log import PreconditionError

logger = logging.getLogger()

Seed = int | np.random.Generator


def make_rng(seed: Seed) -> np.random.Generator:
    """
    PCG64 stream for a 64-bit seed. Passing a Generator continues that stream.
    """
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.Generator(np.random.PCG64(seed & 0xFFFF_FFFF_FFFF_FFFF))


def tree_from_pruefer(sequence: list[int], n: int) -> list[tuple[int, int]]:
    """Decode a Pruefer sequence of length n - 2 into the edges of a labeled tree"""
    degree = [1] * n
    for v in sequence:
        degree[v] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for v in sequence:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    u, w = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((u, w))
    return edges


def random_tree_edges(n: int, rng: np.random.Generator) -> list[tuple[int, int]]:
    """Uniform labeled tree through a random Pruefer sequence"""
    if n <= 1:
        return []
    if n == 2:
        return [(0, 1)]
    sequence = [int(v) for v in rng.integers(0, n, size=n - 2)]
    return tree_from_pruefer(sequence, n)


def random_tree(n: int, seed: Seed) -> Graph:
    return Graph.from_edges(n, random_tree_edges(n, make_rng(seed)))


def random_unicyclic(n: int, seed: Seed) -> Graph:
    """
    A random labeled tree plus one uniformly chosen non-edge, which closes
    exactly one cycle.

    Raises:
        PreconditionError: n < 3
    """
    if n < 3:
        raise PreconditionError(f"unicyclic graphs need at least 3 vertices, found n={n}")
    rng = make_rng(seed)
    tree = Graph.from_edges(n, random_tree_edges(n, rng))
    non_edges = [(u, v) for u in range(n) for v in range(u + 1, n) if not tree.has_edge(u, v)]
    u, v = non_edges[int(rng.integers(0, len(non_edges)))]
    return Graph.from_edges(n, tree.edges() + [(u, v)])


def random_gnp(n: int, p: float, seed: Seed) -> Graph:
    """Erdos-Renyi G(n, p) over the lexicographic list of vertex pairs"""
    rng = make_rng(seed)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    keep = rng.random(len(pairs)) < p
    return Graph.from_edges(n, (pair for pair, k in zip(pairs, keep) if k))


def random_tree_plus(n: int, p: float, seed: Seed) -> Graph:
    """Connected random graph: a random tree plus every other pair with probability p"""
    rng = make_rng(seed)
    tree = Graph.from_edges(n, random_tree_edges(n, rng))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if not tree.has_edge(u, v)]
    keep = rng.random(len(pairs)) < p
    return Graph.from_edges(n, tree.edges() + [pair for pair, k in zip(pairs, keep) if k])
