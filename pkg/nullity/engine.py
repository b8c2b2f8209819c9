"""Per-nullity from matchings: eta = n - 2nu, lowered by M(G) when G[D] has factor-critical components"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field, replace
from enum import Enum

from core.formats import describe
from core.graph import Graph
from core.structure import component_masks, induced_subgraph, is_connected
from matching.gallai_edmonds import GEDecomposition, gallai_edmonds
from matching.statistic import b_assignment, m_statistic
from permanent.sachs import per_nullity_oracle
from utils.log import PreconditionError, TheoremViolationError

logger = logging.getLogger()


class NullityCase(str, Enum):
    PERFECT_MATCHING = "PERFECT_MATCHING"
    F_EMPTY = "F_EMPTY"
    GENERAL = "GENERAL"


class ZeroNullityCase(str, Enum):
    """Which alternative of the zero-nullity characterization holds"""
    PERFECT_MATCHING = "i"
    NO_ISOLATED_IN_D = "ii"
    SINGLETONS_COVERABLE = "iii"


@dataclass(frozen=True)
class ComponentReport:
    vertices: tuple[int, ...]
    nu: int
    m_stat: int
    eta: int
    case: NullityCase
    decomposition: GEDecomposition = field(repr=False, compare=False)

    @property
    def n(self) -> int:
        return len(self.vertices)

    def to_dict(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "n": self.n,
            "nu": self.nu,
            "m_stat": self.m_stat,
            "eta": self.eta,
            "case_fired": self.case.value,
        }


@dataclass(frozen=True)
class NullityReport:
    """
    Structural per-nullity of a graph, summed over its connected components.
    `eta_oracle` is filled only when the Sachs oracle was run.
    """
    graph6: str
    n: int
    nu: int
    m_stat: int
    eta_structural: int
    components: tuple[ComponentReport, ...]
    eta_oracle: int | None = None

    @property
    def cases(self) -> list[NullityCase]:
        return [c.case for c in self.components]

    def to_dict(self) -> dict:
        record = {
            "graph6": self.graph6,
            "n": self.n,
            "nu": self.nu,
            "m_stat": self.m_stat,
            "eta_structural": self.eta_structural,
        }
        if self.eta_oracle is not None:
            record["eta_oracle"] = self.eta_oracle
        record["case_fired"] = [c.value for c in self.cases]
        record["components"] = [c.to_dict() for c in self.components]
        return record


def _component_report(g: Graph, comp_mask: int) -> ComponentReport:
    sub, relabel = induced_subgraph(g, comp_mask)
    dec = gallai_edmonds(sub)
    vertices = tuple(sorted(relabel))
    if dec.has_perfect_matching:
        return ComponentReport(vertices, dec.nu, 0, sub.n - 2 * dec.nu, NullityCase.PERFECT_MATCHING, dec)
    if not dec.F:
        return ComponentReport(vertices, dec.nu, 0, sub.n - 2 * dec.nu, NullityCase.F_EMPTY, dec)
    m = m_statistic(sub, dec).value
    return ComponentReport(vertices, dec.nu, m, sub.n - 2 * dec.nu - m, NullityCase.GENERAL, dec)


def per_nullity_structural(g: Graph) -> NullityReport:
    """
    eta(G) summed over components H:
        |V(H)| - 2nu(H)          if H has a perfect matching or F(H) is empty
        |V(H)| - 2nu(H) - M(H)   otherwise
    Isolated vertices land in the second case and contribute 1 each.
    """
    components = tuple(_component_report(g, mask) for mask in component_masks(g))
    report = NullityReport(
        graph6=describe(g),
        n=g.n,
        nu=sum(c.nu for c in components),
        m_stat=sum(c.m_stat for c in components),
        eta_structural=sum(c.eta for c in components),
        components=components,
    )
    logger.debug(f"{report.graph6}: eta={report.eta_structural} nu={report.nu} M={report.m_stat}")
    return report


def with_oracle(report: NullityReport, g: Graph, allow_large: bool = False) -> NullityReport:
    """
    Attach the Sachs-oracle nullity to a report.

    Raises:
        TheoremViolationError: the oracle disagrees with the structural value
    """
    eta = per_nullity_oracle(g, allow_large=allow_large)
    if eta != report.eta_structural:
        raise TheoremViolationError(
            f"{report.graph6}: structural per-nullity {report.eta_structural} but oracle gives {eta}"
        )
    return replace(report, eta_oracle=eta)


def zero_nullity_characterization(g: Graph) -> tuple[bool, ZeroNullityCase | None]:
    """
    Decide eta(G) = 0 for a connected graph on n >= 2 vertices: (i) G has a
    perfect matching, (ii) G[D] has no isolated vertex, or (iii) some maximum
    matching covers every isolated vertex of G[D]. (iii) is a bipartite
    feasibility question between B and the components of G[D].

    Returns:
        tuple[bool, ZeroNullityCase | None]: verdict and the first alternative that holds

    Raises:
        PreconditionError: n < 2 or g disconnected
    """
    if g.n < 2 or not is_connected(g):
        raise PreconditionError(f"zero-nullity characterization needs a connected graph with n >= 2: {describe(g)}")
    dec = gallai_edmonds(g)
    if dec.has_perfect_matching:
        return True, ZeroNullityCase.PERFECT_MATCHING
    if not dec.D0:
        return True, ZeroNullityCase.NO_ISOLATED_IN_D
    _, covered = b_assignment(g, dec)
    if covered == len(dec.D0):
        return True, ZeroNullityCase.SINGLETONS_COVERABLE
    return False, None
