"""
Registry of graph checks. Each check maps a graph to `None` when the graph is
outside its hypothesis (skipped), or to an (expected, got) pair; the check
passes when the two are equal.
"""
from __future__ import annotations

import logging
from collections.abc import Callable
from functools import cached_property, reduce

from core.graph import Graph
from core.structure import component_masks, edges_inside, induced_subgraph, is_connected, is_unicyclic
from matching.blossom import is_factor_critical, matching_number
from matching.gallai_edmonds import check_gallai_edmonds, gallai_edmonds
from matching.oracle import m_statistic_oracle, missed_vertices
from matching.statistic import m_statistic
from nullity.engine import per_nullity_structural, zero_nullity_characterization
from nullity.theorems import (
    line_graph_matching_check,
    line_graph_nullity_check,
    unicyclic_nullity,
    unicyclic_zero_check,
)
from nullity.witness import structural_sachs_subgraph
from permanent.polynomial import PermPolynomial, perm_polynomial_interpolation
from permanent.sachs import enumerate_cycles, max_sachs_subgraph, perm_polynomial_sachs
from utils.process import iter_bits

logger = logging.getLogger()

Verdict = tuple[object, object] | None


class GraphFacts:
    """Lazily computed invariants of one graph, shared between checks"""

    def __init__(self, g: Graph, allow_large: bool = False):
        self.g = g
        self.allow_large = allow_large

    @cached_property
    def connected(self) -> bool:
        return is_connected(self.g)

    @cached_property
    def report(self):
        return per_nullity_structural(self.g)

    @cached_property
    def sachs(self) -> PermPolynomial:
        return perm_polynomial_sachs(self.g, allow_large=self.allow_large)

    @cached_property
    def eta(self) -> int:
        """Per-nullity by the Sachs oracle"""
        return self.sachs.nullity

    @cached_property
    def decomposition(self):
        return gallai_edmonds(self.g)

    @cached_property
    def components(self) -> list[Graph]:
        return [induced_subgraph(self.g, mask)[0] for mask in component_masks(self.g)]

    @cached_property
    def component_sachs(self) -> list[PermPolynomial]:
        return [perm_polynomial_sachs(h, allow_large=self.allow_large) for h in self.components]


def oracle_equivalence(f: GraphFacts) -> Verdict:
    return f.eta, f.report.eta_structural


def sachs_vs_interpolation(f: GraphFacts) -> Verdict:
    return perm_polynomial_interpolation(f.g, allow_large=f.allow_large).coeffs, f.sachs.coeffs


def sign_pattern(f: GraphFacts) -> Verdict:
    return True, f.sachs.sign_pattern_holds()


def max_sachs(f: GraphFacts) -> Verdict:
    """n - |V(S(G))| equals the nullity, and eta = 0 exactly when S(G) spans"""
    s = max_sachs_subgraph(f.g, allow_large=f.allow_large)
    return (True, f.eta, f.eta == 0), (s.is_valid_in(f.g), f.g.n - s.order, s.order == f.g.n)


def additivity(f: GraphFacts) -> Verdict:
    if len(f.components) < 2:
        return None
    product = reduce(lambda a, b: a * b, f.component_sachs)
    summed = sum(p.nullity for p in f.component_sachs)
    return (product.coeffs, summed), (f.sachs.coeffs, f.eta)


def gallai_edmonds_clauses(f: GraphFacts) -> Verdict:
    return [], check_gallai_edmonds(f.g, f.decomposition)


def d_definition(f: GraphFacts) -> Verdict:
    return list(iter_bits(missed_vertices(f.g, allow_large=f.allow_large))), f.decomposition.D.to_list()


def m_statistic_equivalence(f: GraphFacts) -> Verdict:
    expected, got = [], []
    for h in f.components:
        expected.append(m_statistic_oracle(h, allow_large=f.allow_large))
        got.append(m_statistic(h, gallai_edmonds(h)).value)
    return expected, got


def uncovered_component(f: GraphFacts) -> Verdict:
    """A graph without perfect matching whose G[D] has a factor-critical component has M(G) >= 1"""
    relevant = [c for c in f.report.components if c.decomposition.F and not c.decomposition.has_perfect_matching]
    if not relevant:
        return None
    return [True] * len(relevant), [c.m_stat >= 1 for c in relevant]


def matching_bound(f: GraphFacts) -> Verdict:
    """
    Per component: eta = n - 2nu iff (perfect matching or G[D] edgeless),
    and G[D] edgeless iff no component of G[D] has order >= 3.
    """
    expected, got = [], []
    for h, c, poly in zip(f.components, f.report.components, f.component_sachs):
        dec = c.decomposition
        edgeless = edges_inside(h, dec.D.mask) == 0
        expected.append((poly.nullity == h.n - 2 * c.nu, edgeless))
        got.append((dec.has_perfect_matching or edgeless, not dec.F))
    return expected, got


def nullity_bound(f: GraphFacts) -> Verdict:
    n, eta = f.g.n, f.report.eta_structural
    upper = n - 2 if f.g.num_edges else n
    return True, 0 <= eta <= upper


def zero_nullity(f: GraphFacts) -> Verdict:
    if f.g.n < 2 or not f.connected:
        return None
    verdict, _ = zero_nullity_characterization(f.g)
    return f.eta == 0, verdict


def unicyclic_sandwich(f: GraphFacts) -> Verdict:
    if not is_unicyclic(f.g):
        return None
    bound = f.g.n - 2 * matching_number(f.g)
    return True, bound - 1 <= f.eta <= bound


def unicyclic_thm(f: GraphFacts) -> Verdict:
    if not is_unicyclic(f.g):
        return None
    return (f.eta, f.eta), (unicyclic_nullity(f.g), f.report.eta_structural)


def unicyclic_zero(f: GraphFacts) -> Verdict:
    if not is_unicyclic(f.g):
        return None
    return f.eta == 0, unicyclic_zero_check(f.g)


def line_graph_matching(f: GraphFacts) -> Verdict:
    if f.g.n < 2 or not f.connected:
        return None
    return [], line_graph_matching_check(f.g).violations()


def line_graph_nullity(f: GraphFacts) -> Verdict:
    if f.g.n < 2 or not f.connected:
        return None
    return True, line_graph_nullity_check(f.g) in (0, 1)


def factor_critical(f: GraphFacts) -> Verdict:
    """
    Factor-critical graphs of order >= 3: eta = 0 both ways, M(G) = 1, a
    spanning Sachs subgraph, and every vertex on an odd cycle. K1 is
    factor-critical but has eta = 1, so it is skipped.
    """
    g = f.g
    if g.n < 3 or not f.connected or not is_factor_critical(g):
        return None
    odd_cover = 0
    for cycle in enumerate_cycles(g, allow_large=f.allow_large):
        if cycle.is_odd:
            odd_cover |= cycle.mask
    on_odd_cycles = odd_cover == g.vertex_mask
    spanning = max_sachs_subgraph(g, allow_large=f.allow_large).order
    return (0, 0, 1, g.n, True), (f.report.eta_structural, f.eta, f.report.m_stat, spanning, on_odd_cycles)


def structural_witness(f: GraphFacts) -> Verdict:
    s = structural_sachs_subgraph(f.g)
    return (True, f.g.n - f.eta), (s.is_valid_in(f.g), s.order)


CHECKS: dict[str, Callable[[GraphFacts], Verdict]] = {
    "oracle_equivalence": oracle_equivalence,
    "sachs_vs_interpolation": sachs_vs_interpolation,
    "sign_pattern": sign_pattern,
    "max_sachs": max_sachs,
    "additivity": additivity,
    "gallai_edmonds": gallai_edmonds_clauses,
    "d_definition": d_definition,
    "m_statistic": m_statistic_equivalence,
    "uncovered_component": uncovered_component,
    "matching_bound": matching_bound,
    "nullity_bound": nullity_bound,
    "zero_nullity": zero_nullity,
    "unicyclic_sandwich": unicyclic_sandwich,
    "unicyclic_thm": unicyclic_thm,
    "unicyclic_zero": unicyclic_zero,
    "line_graph_matching": line_graph_matching,
    "line_graph_nullity": line_graph_nullity,
    "factor_critical": factor_critical,
    "structural_witness": structural_witness,
}
