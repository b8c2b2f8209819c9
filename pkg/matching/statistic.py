"""M(G): factor-critical components of G[D] left with an uncovered vertex"""
from __future__ import annotations

import logging
from dataclasses import dataclass

import networkx as nx

from core.graph import Graph
from core.structure import is_connected
from matching.gallai_edmonds import GEDecomposition
from utils.log import ArgumentError, InvariantViolationError, PreconditionError

logger = logging.getLogger()

_SOURCE, _SINK = "source", "sink"


@dataclass(frozen=True)
class MStatistic:
    """
    value: M(G)
    saturated_singletons: most singleton components of G[D] a maximum matching can cover
    witness: (B-vertex, index of its component in d_components) pairs realizing the optimum
    """
    value: int
    saturated_singletons: int
    witness: tuple[tuple[int, int], ...]

    def assignment(self) -> dict[int, int]:
        return dict(self.witness)


def _check_consistent(g: Graph, dec: GEDecomposition) -> None:
    if dec.n != g.n:
        raise ArgumentError(f"decomposition is for {dec.n} vertices, graph has {g.n}")
    d, b, c = dec.D.mask, dec.B.mask, dec.C.mask
    if d & b or d & c or b & c or (d | b | c) != g.vertex_mask:
        raise ArgumentError("decomposition does not partition the vertex set")
    if b != g.neighbor_mask(d) & ~d:
        raise ArgumentError("B is not the neighborhood of D outside D")
    if sum(c.mask for c in dec.d_components) != d:
        raise ArgumentError("components of G[D] do not cover D")


def b_assignment(g: Graph, dec: GEDecomposition) -> tuple[dict[int, int], int]:
    """
    Match every B-vertex to a distinct adjacent component of G[D], covering as
    many singleton components as possible.

    Solved as a min-cost max-flow: source -> b (cap 1), b -> component K when b
    has a neighbor in K (cap 1, cost -1 for singletons, 0 otherwise),
    K -> sink (cap 1).

    Returns:
        tuple[dict[int, int], int]: B-vertex -> component index, and the number
            of singleton components covered

    Raises:
        InvariantViolationError: B cannot be saturated (contradicts the structure theorem)
    """
    if len(dec.B) == 0:
        return {}, 0
    singleton = set(dec.D0)
    network = nx.DiGraph()
    for b in dec.B:
        network.add_edge(_SOURCE, ("b", b), capacity=1, weight=0)
    for b in dec.B:
        for i, comp in enumerate(dec.d_components):
            if g.adj[b] & comp.mask:
                network.add_edge(("b", b), ("k", i), capacity=1, weight=-1 if i in singleton else 0)
    for i in range(dec.c_d):
        network.add_edge(("k", i), _SINK, capacity=1, weight=0)

    flow = nx.max_flow_min_cost(network, _SOURCE, _SINK)
    assignment = {}
    for b in dec.B:
        for target, units in flow[("b", b)].items():
            if units:
                assignment[b] = target[1]
    if len(assignment) != len(dec.B):
        raise InvariantViolationError(
            f"only {len(assignment)} of {len(dec.B)} B-vertices can be matched into distinct D-components"
        )
    covered = sum(1 for i in assignment.values() if i in singleton)
    return assignment, covered


def m_statistic(g: Graph, dec: GEDecomposition) -> MStatistic:
    """
    Compute M(G) without enumerating matchings.

    Every maximum matching matches B into distinct components of G[D] and is
    near-perfect inside each component, so a component keeps exactly one
    uncovered vertex iff no B-vertex is matched into it. Maximizing the covered
    singletons fixes how many factor-critical components B can reach.

    Args:
        g (Graph): connected graph
        dec (GEDecomposition): gallai_edmonds(g)

    Returns:
        MStatistic
    """
    _check_consistent(g, dec)
    if not is_connected(g):
        raise PreconditionError("M(G) is defined here for connected graphs; apply it per component")
    assignment, covered = b_assignment(g, dec)
    if not dec.F:
        return MStatistic(0, covered, tuple(sorted(assignment.items())))
    factor_critical = set(dec.F)
    reached = sum(1 for i in assignment.values() if i in factor_critical)
    value = len(dec.F) - reached
    logger.debug(f"M(G)={value}: |F|={len(dec.F)} reached={reached} singletons covered={covered}/{len(dec.D0)}")
    return MStatistic(value, covered, tuple(sorted(assignment.items())))
