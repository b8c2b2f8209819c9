"""Sachs subgraphs: coefficient expansion of pi(G, x), per-nullity oracle, maximum Sachs subgraph"""
from __future__ import annotations

import logging
from dataclasses import dataclass

from core.graph import Graph, VertexSet, CycleInfo
from permanent.polynomial import PermPolynomial
from utils.process import check_guard, iter_bits, popcount

logger = logging.getLogger()

SACHS_MAX_N = 20
# cycles of K9 fit, K10 has 556014
SACHS_MAX_CYCLES = 100_000

CycleIndex = list[list[tuple[int, tuple[int, ...]]]]


@dataclass(frozen=True)
class SachsSubgraph:
    """Vertex-disjoint single edges and cycles of a host graph"""
    n: int
    edges: tuple[tuple[int, int], ...] = ()
    cycles: tuple[CycleInfo, ...] = ()

    @property
    def cycle_count(self) -> int:
        """c(H)"""
        return len(self.cycles)

    @property
    def covered(self) -> VertexSet:
        return VertexSet.of([v for e in self.edges for v in e] + [v for c in self.cycles for v in c.vertices], self.n)

    @property
    def order(self) -> int:
        return 2 * len(self.edges) + sum(c.length for c in self.cycles)

    def is_valid_in(self, g: Graph) -> bool:
        """Components are pairwise disjoint edges and cycles of g"""
        if self.n != g.n:
            return False
        if not all(g.has_edge(u, v) for u, v in self.edges):
            return False
        if not all(c.is_valid_in(g) for c in self.cycles):
            return False
        return len(self.covered) == self.order

    def to_dict(self) -> dict:
        return {
            "covered": len(self.covered),
            "cycle_count": self.cycle_count,
            "edges": [list(e) for e in self.edges],
            "cycles": [list(c.vertices) for c in self.cycles],
        }


def _index_cycles(g: Graph, allow_large: bool = False) -> CycleIndex:
    """
    Cycles grouped by their smallest vertex s, as (mask, vertices). Every cycle
    appears once: it runs through vertices > s only, and its second vertex is
    smaller than its last.

    Raises:
        ScaleGuardError: more than SACHS_MAX_CYCLES cycles without override
    """
    by_start: CycleIndex = [[] for _ in range(g.n)]
    count = 0
    for s in range(g.n):
        above = g.vertex_mask & ~((1 << (s + 1)) - 1)
        path = [s]

        def walk(v: int, used: int) -> None:
            nonlocal count
            for u in iter_bits(g.adj[v] & above & ~used):
                path.append(u)
                if len(path) >= 3 and g.adj[u] >> s & 1 and path[1] < u:
                    by_start[s].append((used | 1 << u, tuple(path)))
                    count += 1
                    if count > SACHS_MAX_CYCLES and not allow_large:
                        check_guard("cycles for Sachs enumeration", count, SACHS_MAX_CYCLES)
                walk(u, used | 1 << u)
                path.pop()

        walk(s, 1 << s)
    check_guard("cycles for Sachs enumeration", count, SACHS_MAX_CYCLES, allow_large)
    return by_start


def enumerate_cycles(g: Graph, allow_large: bool = False) -> list[CycleInfo]:
    """All cycles of g, each listed once"""
    return [CycleInfo(vertices) for group in _index_cycles(g, allow_large) for _, vertices in group]


def perm_polynomial_sachs(g: Graph, allow_large: bool = False) -> PermPolynomial:
    """
    b_k = (-1)^k * sum over Sachs subgraphs H on k vertices of 2^c(H).

    The lowest uncovered vertex is either skipped, matched to a neighbor, or
    the smallest vertex of a cycle; totals per vertex subset are memoized.
    """
    check_guard("graph for Sachs enumeration", g.n, SACHS_MAX_N, allow_large)
    by_start = _index_cycles(g, allow_large)
    memo: dict[int, list[int]] = {0: [1]}

    def weights(free: int) -> list[int]:
        # weights(free)[k]: sum of 2^c(H) over Sachs subgraphs inside `free` on k vertices
        if free in memo:
            return memo[free]
        v = (free & -free).bit_length() - 1
        rest = free & ~(1 << v)
        out = list(weights(rest))

        def add(part: list[int], shift: int, factor: int) -> None:
            need = len(part) + shift
            if len(out) < need:
                out.extend([0] * (need - len(out)))
            for k, w in enumerate(part):
                if w:
                    out[k + shift] += factor * w

        for u in iter_bits(g.adj[v] & rest):
            add(weights(rest & ~(1 << u)), 2, 1)
        for mask, vertices in by_start[v]:
            if mask & ~free == 0:
                add(weights(free & ~mask), len(vertices), 2)
        memo[free] = out
        return out

    totals = weights(g.vertex_mask)
    coeffs = [0] * (g.n + 1)
    for k, w in enumerate(totals):
        coeffs[k] = -w if k & 1 else w
    logger.debug(f"Sachs expansion over {len(memo)} vertex subsets")
    return PermPolynomial(tuple(coeffs))


def per_nullity_oracle(g: Graph, allow_large: bool = False) -> int:
    """Multiplicity of the root 0 of pi(G, x), read off the exact coefficients"""
    return perm_polynomial_sachs(g, allow_large=allow_large).nullity


def max_sachs_subgraph(g: Graph, allow_large: bool = False) -> SachsSubgraph:
    """
    A Sachs subgraph covering as many vertices as possible.

    Branch and bound over the same recursion as the coefficient expansion:
    a branch is cut when the covered count plus the vertices still free
    cannot beat the best found so far. Longer cycles are tried first.
    """
    check_guard("graph for Sachs search", g.n, SACHS_MAX_N, allow_large)
    by_start = [sorted(group, key=lambda c: -len(c[1])) for group in _index_cycles(g, allow_large)]
    best: dict = {"size": -1, "edges": (), "cycles": ()}
    edges: list[tuple[int, int]] = []
    cycles: list[tuple[int, ...]] = []

    def search(free: int, covered: int) -> None:
        if covered + popcount(free) <= best["size"] or best["size"] == g.n:
            return
        if not free:
            best.update(size=covered, edges=tuple(edges), cycles=tuple(cycles))
            return
        v = (free & -free).bit_length() - 1
        rest = free & ~(1 << v)
        for mask, vertices in by_start[v]:
            if mask & ~free == 0:
                cycles.append(vertices)
                search(free & ~mask, covered + len(vertices))
                cycles.pop()
        for u in iter_bits(g.adj[v] & rest):
            edges.append((v, u))
            search(rest & ~(1 << u), covered + 2)
            edges.pop()
        search(rest, covered)

    search(g.vertex_mask, 0)
    logger.debug(f"maximum Sachs subgraph covers {best['size']} of {g.n} vertices")
    return SachsSubgraph(g.n, best["edges"], tuple(CycleInfo(c) for c in best["cycles"]))
