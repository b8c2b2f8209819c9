"""Maximum cardinality matching in general graphs (Edmonds' blossom algorithm)"""
from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass

from core.graph import Graph
from utils.log import ArgumentError
from utils.process import mask_of

logger = logging.getLogger()

UNMATCHED = -1


@dataclass(frozen=True)
class Matching:
    """
    A matching given by its mate map: `mate[v]` is the partner of v or UNMATCHED.

    `maximum` records whether the matching is known to be of maximum size.
    """
    mate: tuple[int, ...]
    maximum: bool = False

    def __post_init__(self):
        for v, u in enumerate(self.mate):
            if u != UNMATCHED and self.mate[u] != v:
                raise ArgumentError(f"mate map is not an involution at vertex {v}")

    @property
    def n(self) -> int:
        return len(self.mate)

    @property
    def edges(self) -> list[tuple[int, int]]:
        return [(v, u) for v, u in enumerate(self.mate) if u > v]

    @property
    def size(self) -> int:
        return sum(1 for v, u in enumerate(self.mate) if u > v)

    @property
    def covered_mask(self) -> int:
        return mask_of(v for v, u in enumerate(self.mate) if u != UNMATCHED)

    def covers(self, v: int) -> bool:
        return self.mate[v] != UNMATCHED

    @property
    def is_perfect(self) -> bool:
        return 2 * self.size == self.n

    @property
    def is_near_perfect(self) -> bool:
        return 2 * self.size == self.n - 1

    def is_valid_in(self, g: Graph) -> bool:
        """Every matched pair is an edge of g"""
        return self.n == g.n and all(g.has_edge(u, v) for u, v in self.edges)


def _augment_from(g: Graph, mate: list[int], root: int) -> bool:
    """
    Search an augmenting path from the exposed vertex `root` by BFS over the
    alternating forest, shrinking blossoms onto their base. Augments `mate` in
    place and returns True when a path is found.
    """
    n = g.n
    used = [False] * n
    parent = [UNMATCHED] * n
    base = list(range(n))
    used[root] = True
    queue = deque([root])

    def lowest_common_base(a: int, b: int) -> int:
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if mate[a] == UNMATCHED:
                break
            a = parent[mate[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[mate[b]]

    def mark_path(v: int, stop: int, child: int, blossom: list[bool]) -> None:
        while base[v] != stop:
            blossom[base[v]] = blossom[base[mate[v]]] = True
            parent[v] = child
            child = mate[v]
            v = parent[mate[v]]

    while queue:
        v = queue.popleft()
        for to in g.neighbors(v):
            if base[v] == base[to] or mate[v] == to:
                continue
            if to == root or (mate[to] != UNMATCHED and parent[mate[to]] != UNMATCHED):
                # odd cycle through two outer vertices: shrink it
                current = lowest_common_base(v, to)
                blossom = [False] * n
                mark_path(v, current, to, blossom)
                mark_path(to, current, v, blossom)
                for i in range(n):
                    if blossom[base[i]]:
                        base[i] = current
                        if not used[i]:
                            used[i] = True
                            queue.append(i)
            elif parent[to] == UNMATCHED:
                parent[to] = v
                if mate[to] == UNMATCHED:
                    while to != UNMATCHED:
                        pv = parent[to]
                        ppv = mate[pv]
                        mate[to] = pv
                        mate[pv] = to
                        to = ppv
                    return True
                used[mate[to]] = True
                queue.append(mate[to])
    return False


def maximum_matching(g: Graph) -> Matching:
    """
    Maximum matching of g.

    Vertices and neighbor lists are scanned in ascending label order, starting
    from the greedy matching, so the result is reproducible.

    Args:
        g (Graph): input graph

    Returns:
        Matching: a maximum matching flagged as such
    """
    mate = [UNMATCHED] * g.n
    for v in range(g.n):
        if mate[v] == UNMATCHED:
            for u in g.neighbors(v):
                if mate[u] == UNMATCHED:
                    mate[v], mate[u] = u, v
                    break
    for root in range(g.n):
        if mate[root] == UNMATCHED and g.adj[root]:
            _augment_from(g, mate, root)
    return Matching(tuple(mate), maximum=True)


def maximum_matching_within(g: Graph, mask: int) -> Matching:
    """Maximum matching of G[mask], reported on the labels of g"""
    return maximum_matching(g.remove_vertices(g.vertex_mask & ~mask))


def matching_number(g: Graph) -> int:
    """nu(G), the size of a maximum matching"""
    return maximum_matching(g).size


def has_perfect_matching(g: Graph) -> bool:
    return g.n % 2 == 0 and 2 * matching_number(g) == g.n


def has_near_perfect_matching(g: Graph) -> bool:
    return g.n % 2 == 1 and 2 * matching_number(g) == g.n - 1


def is_factor_critical(g: Graph) -> bool:
    """G - v has a perfect matching for every vertex v. K1 qualifies, the null graph does not"""
    if g.n % 2 == 0:
        return False
    half = (g.n - 1) // 2
    return all(matching_number(g.remove_vertices(1 << v)) == half for v in range(g.n))
