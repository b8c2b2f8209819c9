"""Build a maximum Sachs subgraph from the Gallai-Edmonds structure, without search"""
import logging

from core.graph import Graph, CycleInfo
from core.structure import component_masks, induced_subgraph
from matching.blossom import maximum_matching_within
from matching.gallai_edmonds import gallai_edmonds
from matching.statistic import b_assignment
from permanent.sachs import SachsSubgraph
from utils.log import InvariantViolationError
from utils.process import iter_bits, popcount

logger = logging.getLogger()


def odd_cycle_cover(g: Graph, mask: int) -> tuple[CycleInfo, list[tuple[int, int]]]:
    """
    Cover a factor-critical G[mask] of order >= 3 by an odd cycle plus a matching.

    For an edge uv, the perfect matchings of H - u and H - v differ on a path
    of even length from u to v; closing it with uv gives an odd cycle C, and
    the edges of the matching of H - v that avoid C cover the rest.
    """
    u = (mask & -mask).bit_length() - 1
    v = min(iter_bits(g.adj[u] & mask))
    without_u = maximum_matching_within(g, mask & ~(1 << u))
    without_v = maximum_matching_within(g, mask & ~(1 << v))

    path = [u]
    cur, use_v = u, True
    while cur != v:
        cur = (without_v if use_v else without_u).mate[cur]
        if cur < 0 or len(path) > popcount(mask):
            raise InvariantViolationError(f"no alternating u-v path in component {list(iter_bits(mask))}")
        path.append(cur)
        use_v = not use_v
    cycle = CycleInfo(tuple(path))
    on_cycle = cycle.mask
    rest = [(a, b) for a, b in without_v.edges if not (on_cycle >> a & 1 or on_cycle >> b & 1)]
    return cycle, rest


def _connected_witness(h: Graph) -> tuple[list[tuple[int, int]], list[CycleInfo]]:
    dec = gallai_edmonds(h)
    assignment, _ = b_assignment(h, dec)
    edges: list[tuple[int, int]] = []
    cycles: list[CycleInfo] = []
    entry = {}
    for b, i in assignment.items():
        w = min(iter_bits(h.adj[b] & dec.d_components[i].mask))
        edges.append((min(b, w), max(b, w)))
        entry[i] = w
    for i, comp in enumerate(dec.d_components):
        mask = comp.mask
        if i in entry:
            edges.extend(maximum_matching_within(h, mask & ~(1 << entry[i])).edges)
        elif len(comp) >= 3:
            cycle, rest = odd_cycle_cover(h, mask)
            cycles.append(cycle)
            edges.extend(rest)
    edges.extend(maximum_matching_within(h, dec.C.mask).edges)
    return edges, cycles


def structural_sachs_subgraph(g: Graph) -> SachsSubgraph:
    """
    A maximum Sachs subgraph assembled component by component: a maximum
    matching whose B-part covers as many singletons of G[D] as possible, with
    every factor-critical component of G[D] that B does not reach covered by
    an odd cycle instead of a near-perfect matching.

    Returns:
        SachsSubgraph: covers n - eta(G) vertices
    """
    edges: list[tuple[int, int]] = []
    cycles: list[CycleInfo] = []
    for comp in component_masks(g):
        h, relabel = induced_subgraph(g, comp)
        back = {new: old for old, new in relabel.items()}
        local_edges, local_cycles = _connected_witness(h)
        edges.extend(tuple(sorted((back[a], back[b]))) for a, b in local_edges)
        cycles.extend(CycleInfo(tuple(back[v] for v in c.vertices)) for c in local_cycles)
    witness = SachsSubgraph(g.n, tuple(sorted(edges)), tuple(cycles))
    logger.debug(f"structural Sachs subgraph covers {witness.order} of {g.n} vertices")
    return witness
