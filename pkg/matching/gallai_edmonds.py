"""Gallai-Edmonds decomposition D / B / C of a graph"""
from __future__ import annotations

import logging
from dataclasses import dataclass

from core.graph import Graph, VertexSet
from core.structure import component_masks, induced_subgraph
from matching.blossom import Matching, UNMATCHED, maximum_matching, matching_number, is_factor_critical
from utils.process import popcount

logger = logging.getLogger()


@dataclass(frozen=True)
class GEDecomposition:
    """
    The Gallai-Edmonds partition.

    D: vertices missed by at least one maximum matching
    B: vertices outside D with a neighbor in D
    C: everything else
    d_components: components of G[D], ordered by smallest member
    D0: indices into d_components of the singleton components
    F: indices into d_components of the components of order >= 3
    """
    n: int
    nu: int
    D: VertexSet
    B: VertexSet
    C: VertexSet
    d_components: tuple[VertexSet, ...]
    D0: tuple[int, ...]
    F: tuple[int, ...]

    @property
    def c_d(self) -> int:
        """c(D), the number of components of G[D]"""
        return len(self.d_components)

    @property
    def singletons(self) -> list[int]:
        """D0' as vertex labels"""
        return [self.d_components[i].members[0] for i in self.D0]

    @property
    def has_perfect_matching(self) -> bool:
        return len(self.D) == 0

    def predicted_nu(self) -> int:
        """(|V| - c(D) + |B|) / 2"""
        return (self.n - self.c_d + len(self.B)) // 2

    def component_of(self) -> dict[int, int]:
        """Map D-vertex -> index of its component"""
        return {v: i for i, comp in enumerate(self.d_components) for v in comp}

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "nu": self.nu,
            "D": self.D.to_list(),
            "B": self.B.to_list(),
            "C": self.C.to_list(),
            "d_components": [c.to_list() for c in self.d_components],
            "D0": self.singletons,
            "F": [self.d_components[i].to_list() for i in self.F],
        }


def gallai_edmonds(g: Graph) -> GEDecomposition:
    """
    Compute the decomposition by the vertex-deletion criterion:
    v is in D iff nu(G - v) = nu(G). Costs n + 1 blossom runs.

    Args:
        g (Graph): input graph, connected or not

    Returns:
        GEDecomposition
    """
    nu = matching_number(g)
    d_mask = 0
    for v in range(g.n):
        if matching_number(g.remove_vertices(1 << v)) == nu:
            d_mask |= 1 << v
    b_mask = g.neighbor_mask(d_mask) & ~d_mask
    c_mask = g.vertex_mask & ~d_mask & ~b_mask
    comps = tuple(VertexSet.from_mask(m, g.n) for m in component_masks(g, within=d_mask))
    d0 = tuple(i for i, c in enumerate(comps) if len(c) == 1)
    f = tuple(i for i, c in enumerate(comps) if len(c) >= 3)
    logger.debug(f"Gallai-Edmonds: |D|={popcount(d_mask)} |B|={popcount(b_mask)} |C|={popcount(c_mask)} c(D)={len(comps)}")
    return GEDecomposition(
        n=g.n,
        nu=nu,
        D=VertexSet.from_mask(d_mask, g.n),
        B=VertexSet.from_mask(b_mask, g.n),
        C=VertexSet.from_mask(c_mask, g.n),
        d_components=comps,
        D0=d0,
        F=f,
    )


def matching_structure_violations(dec: GEDecomposition, m: Matching) -> list[str]:
    """
    Check that a maximum matching has the shape forced by the structure theorem:
    near-perfect on every component of G[D], perfect on G[C], and B matched into
    distinct components of G[D].
    """
    problems = []
    for comp in dec.d_components:
        mask = comp.mask
        inside = sum(1 for v in comp if m.mate[v] != UNMATCHED and mask >> m.mate[v] & 1) // 2
        if 2 * inside != len(comp) - 1:
            problems.append(f"component {comp.to_list()} is not near-perfectly matched")
    c_mask = dec.C.mask
    if any(m.mate[v] == UNMATCHED or not c_mask >> m.mate[v] & 1 for v in dec.C):
        problems.append("G[C] is not perfectly matched")
    owner = dec.component_of()
    used = set()
    for b in dec.B:
        partner = m.mate[b]
        if partner not in owner:
            problems.append(f"B-vertex {b} is not matched into D")
        elif owner[partner] in used:
            problems.append(f"B-vertex {b} shares a D-component with another B-vertex")
        else:
            used.add(owner[partner])
    return problems


def check_gallai_edmonds(g: Graph, dec: GEDecomposition, m: Matching | None = None) -> list[str]:
    """
    List the clauses of the Gallai-Edmonds structure theorem that `dec` violates.

    Args:
        g (Graph): host graph
        dec (GEDecomposition): decomposition of g
        m (Matching | None): maximum matching to check clause (iii) against;
            defaults to maximum_matching(g)

    Returns:
        list[str]: human-readable violations, empty when every clause holds
    """
    problems = []
    d, b, c = dec.D.mask, dec.B.mask, dec.C.mask
    if d & b or d & c or b & c or (d | b | c) != g.vertex_mask:
        problems.append("D, B, C do not partition V")
    if any(len(comp) % 2 == 0 for comp in dec.d_components):
        problems.append("G[D] has a component of even order")
    if any(not g.adj[v] & d for v in dec.B):
        problems.append("a B-vertex has no neighbor in D")
    for comp in dec.d_components:
        sub, _ = induced_subgraph(g, comp)
        if not is_factor_critical(sub):
            problems.append(f"component {comp.to_list()} of G[D] is not factor-critical")
    sub_c, _ = induced_subgraph(g, dec.C)
    if 2 * matching_number(sub_c) != len(dec.C):
        problems.append("G[C] has no perfect matching")
    if m is None:
        m = maximum_matching(g)
    problems.extend(matching_structure_violations(dec, m))
    if m.size != dec.predicted_nu() or 2 * m.size != g.n - dec.c_d + len(dec.B):
        problems.append(f"nu = {m.size} but (|V| - c(D) + |B|)/2 = {(g.n - dec.c_d + len(dec.B)) / 2}")
    return problems


