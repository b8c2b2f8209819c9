"""Exhaustive references: all maximum matchings, D by definition, M(G) by enumeration"""
import logging
from collections.abc import Iterator

from core.formats import describe
from core.graph import Graph
from core.structure import component_masks
from matching.blossom import Matching, UNMATCHED, matching_number
from utils.log import WellDefinednessError
from utils.process import check_guard, iter_bits, popcount

logger = logging.getLogger()

M_ORACLE_MAX_N = 14


def enumerate_maximum_matchings(g: Graph, allow_large: bool = False) -> Iterator[Matching]:
    """
    Yield every maximum matching of g exactly once.

    The lowest unprocessed vertex is matched to each higher unprocessed
    neighbor in turn, or left exposed while fewer than n - 2*nu vertices have
    been left exposed so far.
    """
    check_guard("graph for matching enumeration", g.n, M_ORACLE_MAX_N, allow_large)
    slack = g.n - 2 * matching_number(g)
    mate = [UNMATCHED] * g.n

    def extend(free: int, skipped: int) -> Iterator[Matching]:
        if not free:
            yield Matching(tuple(mate), maximum=True)
            return
        v = (free & -free).bit_length() - 1
        rest = free & ~(1 << v)
        for u in iter_bits(g.adj[v] & rest):
            mate[v], mate[u] = u, v
            yield from extend(rest & ~(1 << u), skipped)
            mate[v] = mate[u] = UNMATCHED
        if skipped < slack:
            yield from extend(rest, skipped + 1)

    yield from extend(g.vertex_mask, 0)


def missed_vertices(g: Graph, allow_large: bool = False) -> int:
    """Bitset of the vertices missed by at least one maximum matching"""
    missed = 0
    for m in enumerate_maximum_matchings(g, allow_large):
        missed |= g.vertex_mask & ~m.covered_mask
    return missed


def m_statistic_oracle(g: Graph, allow_large: bool = False) -> int:
    """
    M(G) straight from its definition.

    Enumerates all maximum matchings, keeps those covering the most singleton
    components of G[D], and counts the components of order >= 3 left with
    exactly one uncovered vertex.

    Raises:
        ScaleGuardError: n above M_ORACLE_MAX_N without override
        WellDefinednessError: the count differs between two qualifying matchings
    """
    matchings = list(enumerate_maximum_matchings(g, allow_large))
    d_mask = 0
    for m in matchings:
        d_mask |= g.vertex_mask & ~m.covered_mask
    components = component_masks(g, within=d_mask)
    singleton_mask = 0
    for c in components:
        if popcount(c) == 1:
            singleton_mask |= c
    large = [c for c in components if popcount(c) >= 3]

    best = max(popcount(m.covered_mask & singleton_mask) for m in matchings)
    counts = {}
    for m in matchings:
        if popcount(m.covered_mask & singleton_mask) != best:
            continue
        count = sum(1 for c in large if popcount(c & ~m.covered_mask) == 1)
        counts.setdefault(count, m)
    if len(counts) > 1:
        detail = ", ".join(f"{k} under {v.edges}" for k, v in sorted(counts.items()))
        raise WellDefinednessError(f"M(G) is not constant over qualifying matchings of {describe(g)}: {detail}")
    value = next(iter(counts))
    logger.debug(f"oracle M(G)={value} over {len(matchings)} maximum matchings")
    return value
