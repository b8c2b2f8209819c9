"""Closed forms for unicyclic graphs and line graphs, as executable checkers"""
from __future__ import annotations

import logging
from dataclasses import dataclass

from core.formats import describe
from core.graph import Graph
from core.structure import (
    component_masks,
    find_unique_cycle,
    induced_subgraph,
    is_connected,
    is_two_edge_connected,
    is_unicyclic,
    line_graph,
)
from matching.blossom import has_near_perfect_matching, has_perfect_matching, is_factor_critical, matching_number
from nullity.engine import per_nullity_structural
from utils.log import PreconditionError, TheoremViolationError
from utils.process import popcount

logger = logging.getLogger()


def _require_unicyclic(g: Graph) -> None:
    if not is_unicyclic(g):
        raise PreconditionError(f"graph is not unicyclic: {describe(g)}")


def unicyclic_nullity(g: Graph) -> int:
    """
    eta(G) = n - 2nu(G) - 1 when the cycle C is odd and nu(G) = (|C| - 1)/2 + nu(G - V(C)),
    and n - 2nu(G) otherwise.

    Raises:
        PreconditionError: g is not unicyclic
    """
    _require_unicyclic(g)
    cycle = find_unique_cycle(g)
    nu = matching_number(g)
    nu_rest = matching_number(g.remove_vertices(cycle.mask))
    if cycle.is_odd and nu == (cycle.length - 1) // 2 + nu_rest:
        return g.n - 2 * nu - 1
    return g.n - 2 * nu


def unicyclic_zero_check(g: Graph) -> bool:
    """
    eta(G) = 0 iff G is an odd cycle, G has a perfect matching, or G - V(C) has one.

    Raises:
        PreconditionError: g is not unicyclic
    """
    _require_unicyclic(g)
    cycle = find_unique_cycle(g)
    if cycle.length == g.n and cycle.is_odd:
        return True
    if has_perfect_matching(g):
        return True
    rest, _ = induced_subgraph(g, g.vertex_mask & ~cycle.mask)
    return has_perfect_matching(rest)


@dataclass(frozen=True)
class LineGraphMatching:
    """Measured matching properties of L(G), next to what decides them in G"""
    edges: int
    two_edge_connected: bool
    lg_perfect: bool
    lg_near_perfect: bool
    lg_factor_critical: bool
    lg_components_even: bool

    def violations(self) -> list[str]:
        """Statements about L(G) that the measurement contradicts"""
        problems = []
        if self.lg_perfect != (self.edges % 2 == 0):
            problems.append(f"L(G) perfect matching is {self.lg_perfect} with |E(G)| = {self.edges}")
        if self.lg_perfect != self.lg_components_even:
            problems.append("L(G) perfect matching disagrees with all components of L(G) having even order")
        if self.edges % 2 == 1 and self.edges >= 3:
            if not self.lg_near_perfect:
                problems.append(f"L(G) has no near-perfect matching with |E(G)| = {self.edges}")
            if self.two_edge_connected and not self.lg_factor_critical:
                problems.append("L(G) of a 2-edge-connected graph with odd size is not factor-critical")
        return problems

    def to_dict(self) -> dict:
        return {
            "edges": self.edges,
            "two_edge_connected": self.two_edge_connected,
            "lg_perfect": self.lg_perfect,
            "lg_near_perfect": self.lg_near_perfect,
            "lg_factor_critical": self.lg_factor_critical,
            "lg_components_even": self.lg_components_even,
        }


def line_graph_matching_check(g: Graph) -> LineGraphMatching:
    """
    Measure perfect / near-perfect matchings and factor-criticality of L(G).

    Raises:
        PreconditionError: g trivial or disconnected
    """
    if g.n < 2 or not is_connected(g):
        raise PreconditionError(f"line-graph matching check needs a nontrivial connected graph: {describe(g)}")
    lg, _ = line_graph(g)
    return LineGraphMatching(
        edges=g.num_edges,
        two_edge_connected=is_two_edge_connected(g),
        lg_perfect=has_perfect_matching(lg),
        lg_near_perfect=has_near_perfect_matching(lg),
        lg_factor_critical=is_factor_critical(lg),
        lg_components_even=all(popcount(c) % 2 == 0 for c in component_masks(lg)),
    )


def line_graph_nullity_check(g: Graph) -> int:
    """
    Per-nullity of L(G); for connected g it must be 0 or 1.

    Raises:
        PreconditionError: g trivial
        TheoremViolationError: connected g with eta(L(G)) outside {0, 1}
    """
    if g.n < 2:
        raise PreconditionError(f"line-graph nullity check needs a nontrivial graph: {describe(g)}")
    lg, _ = line_graph(g)
    eta = per_nullity_structural(lg).eta_structural
    if is_connected(g) and eta not in (0, 1):
        raise TheoremViolationError(f"per-nullity of L(G) is {eta} for connected G = {describe(g)}")
    return eta
