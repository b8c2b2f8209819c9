"""Graph corpora: exhaustive labeled enumeration and seeded random families"""
from __future__ import annotations

import logging
from collections.abc import Iterator
from dataclasses import dataclass, asdict
from enum import Enum

from core.graph import Graph
from core.structure import is_connected, line_graph
from matching.blossom import is_factor_critical
from utils.log import ArgumentError
from utils.process import check_guard
from verify.generators import make_rng, random_gnp, random_tree_plus, random_unicyclic

logger = logging.getLogger()

ENUMERATION_MAX_N = 7
RANDOM_MAX_N = 62


class CorpusKind(str, Enum):
    ALL_LABELED = "ALL_LABELED"
    ALL_CONNECTED_LABELED = "ALL_CONNECTED_LABELED"
    RANDOM_GNP = "RANDOM_GNP"
    RANDOM_UNICYCLIC = "RANDOM_UNICYCLIC"
    RANDOM_TREE_PLUS = "RANDOM_TREE_PLUS"
    LINE_GRAPHS_OF = "LINE_GRAPHS_OF"
    FACTOR_CRITICAL_FILTER = "FACTOR_CRITICAL_FILTER"

    @property
    def exhaustive(self) -> bool:
        return self in (CorpusKind.ALL_LABELED, CorpusKind.ALL_CONNECTED_LABELED, CorpusKind.FACTOR_CRITICAL_FILTER)


@dataclass(frozen=True)
class CorpusSpec:
    """
    kind: family of graphs
    n_min, n_max: vertex-count range (inclusive)
    count: number of graphs for random kinds, ignored by exhaustive ones
    seed: 64-bit seed for random kinds
    p: edge probability for RANDOM_GNP, chord probability for RANDOM_TREE_PLUS
        and for the base graphs of LINE_GRAPHS_OF
    """
    kind: CorpusKind
    n_min: int
    n_max: int
    count: int = 0
    seed: int = 0
    p: float = 0.5

    def validate(self, allow_large: bool = False) -> None:
        if self.n_min < 0 or self.n_max < self.n_min:
            raise ArgumentError(f"invalid vertex range {self.n_min}..{self.n_max}")
        if not 0.0 <= self.p <= 1.0:
            raise ArgumentError(f"probability must lie in [0, 1], found {self.p}")
        if self.count < 0:
            raise ArgumentError(f"count must be non-negative, found {self.count}")
        if self.kind.exhaustive:
            check_guard("exhaustive enumeration", self.n_max, ENUMERATION_MAX_N, allow_large)
        else:
            check_guard("random corpus", self.n_max, RANDOM_MAX_N, allow_large)
        if self.kind == CorpusKind.RANDOM_UNICYCLIC and self.n_min < 3:
            raise ArgumentError(f"unicyclic graphs need at least 3 vertices, found n_min={self.n_min}")

    def to_dict(self) -> dict:
        record = asdict(self)
        record["kind"] = self.kind.value
        return record


def labeled_graph_count(n: int) -> int:
    """2^(n(n-1)/2)"""
    return 1 << (n * (n - 1) // 2)


def enumerate_labeled_graphs(n: int, allow_large: bool = False) -> Iterator[Graph]:
    """
    Every labeled simple graph on n vertices, in ascending order of the edge
    bitmask over the lexicographic list of vertex pairs.
    """
    check_guard("exhaustive enumeration", n, ENUMERATION_MAX_N, allow_large)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    for mask in range(1 << len(pairs)):
        rows = [0] * n
        for k, (u, v) in enumerate(pairs):
            if mask >> k & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
        yield Graph(n, tuple(rows))


def enumerate_connected_graphs(n: int, allow_large: bool = False) -> Iterator[Graph]:
    return (g for g in enumerate_labeled_graphs(n, allow_large) if is_connected(g))


def generate(spec: CorpusSpec, allow_large: bool = False) -> Iterator[Graph]:
    """
    Stream the corpus described by `spec`. The same spec always yields the
    same graphs in the same order.
    """
    spec.validate(allow_large)
    sizes = range(spec.n_min, spec.n_max + 1)
    if spec.kind == CorpusKind.ALL_LABELED:
        for n in sizes:
            yield from enumerate_labeled_graphs(n, allow_large)
        return
    if spec.kind == CorpusKind.ALL_CONNECTED_LABELED:
        for n in sizes:
            yield from enumerate_connected_graphs(n, allow_large)
        return
    if spec.kind == CorpusKind.FACTOR_CRITICAL_FILTER:
        for n in sizes:
            if n % 2 == 1:
                yield from (g for g in enumerate_connected_graphs(n, allow_large) if is_factor_critical(g))
        return

    rng = make_rng(spec.seed)
    for _ in range(spec.count):
        n = int(rng.integers(spec.n_min, spec.n_max + 1))
        if spec.kind == CorpusKind.RANDOM_GNP:
            yield random_gnp(n, spec.p, rng)
        elif spec.kind == CorpusKind.RANDOM_UNICYCLIC:
            yield random_unicyclic(n, rng)
        elif spec.kind == CorpusKind.RANDOM_TREE_PLUS:
            yield random_tree_plus(n, spec.p, rng)
        elif spec.kind == CorpusKind.LINE_GRAPHS_OF:
            yield line_graph(random_tree_plus(n, spec.p, rng))[0]
