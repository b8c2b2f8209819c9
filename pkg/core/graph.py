"""Simple undirected graph on labels 0..n-1, stored as per-vertex neighbor bitsets"""
from __future__ import annotations

from dataclasses import dataclass
from collections.abc import Iterable, Iterator

import networkx as nx

from utils.log import ArgumentError
from utils.process import iter_bits, popcount, mask_of


@dataclass(frozen=True)
class Graph:
    """
    Immutable simple graph.

    `adj[v]` is a bitset (Python int) of the neighbors of v. Python ints are
    fixed-width machine words for small n and grow as needed above.
    """
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0:
            raise ArgumentError(f"vertex count must be non-negative, found: {self.n}")
        if len(self.adj) != self.n:
            raise ArgumentError(f"expected {self.n} adjacency rows, found {len(self.adj)}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ArgumentError(f"vertex {v} has a neighbor outside 0..{self.n - 1}")
            if row >> v & 1:
                raise ArgumentError(f"self-loop at vertex {v}")
            for u in iter_bits(row):
                if not self.adj[u] >> v & 1:
                    raise ArgumentError(f"edge {v}-{u} is not symmetric")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        """Build a graph from an edge iterable; duplicate edges collapse"""
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ArgumentError(f"edge {u}-{v} outside 0..{n - 1}")
            if u == v:
                raise ArgumentError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    @classmethod
    def from_networkx(cls, g: nx.Graph) -> Graph:
        """Relabel a networkx graph by sorted node order"""
        index = {node: i for i, node in enumerate(sorted(g.nodes))}
        return cls.from_edges(len(index), ((index[u], index[v]) for u, v in g.edges))

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def neighbors(self, v: int) -> tuple[int, ...]:
        """Sorted neighbors of v"""
        return tuple(iter_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Edges (u, v) with u < v, in lexicographic order"""
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def num_edges(self) -> int:
        return sum(popcount(row) for row in self.adj) // 2

    def neighbor_mask(self, mask: int) -> int:
        """Union of the neighborhoods of the vertices in `mask`"""
        out = 0
        for v in iter_bits(mask):
            out |= self.adj[v]
        return out

    def remove_vertices(self, mask: int) -> Graph:
        """G - S keeping the labels: removed vertices become isolated"""
        keep = self.vertex_mask & ~mask
        return Graph(self.n, tuple(row & keep if keep >> v & 1 else 0 for v, row in enumerate(self.adj)))

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges())
        return g

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


@dataclass(frozen=True)
class VertexSet:
    """Sorted set of vertex labels drawn from a universe of size n"""
    members: tuple[int, ...]
    n: int

    def __post_init__(self):
        if any(not 0 <= v < self.n for v in self.members):
            raise ArgumentError(f"vertex set {self.members} not inside 0..{self.n - 1}")

    @classmethod
    def of(cls, vertices: Iterable[int], n: int) -> VertexSet:
        return cls(tuple(sorted(set(vertices))), n)

    @classmethod
    def from_mask(cls, mask: int, n: int) -> VertexSet:
        return cls(tuple(iter_bits(mask)), n)

    @property
    def mask(self) -> int:
        return mask_of(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __contains__(self, v: int) -> bool:
        return v in self.members

    def to_list(self) -> list[int]:
        return list(self.members)


@dataclass(frozen=True)
class CycleInfo:
    """A cycle given by its vertices in traversal order"""
    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices)

    @property
    def is_odd(self) -> bool:
        return self.length % 2 == 1

    @property
    def parity(self) -> str:
        return "odd" if self.is_odd else "even"

    @property
    def mask(self) -> int:
        return mask_of(self.vertices)

    def edges(self) -> list[tuple[int, int]]:
        k = self.length
        return [tuple(sorted((self.vertices[i], self.vertices[(i + 1) % k]))) for i in range(k)]

    def is_valid_in(self, g: Graph) -> bool:
        """Distinct vertices, length at least 3, consecutive vertices adjacent in g"""
        if self.length < 3 or len(set(self.vertices)) != self.length:
            return False
        return all(g.has_edge(u, v) for u, v in self.edges())
