import pytest

from core.graph import Graph
from core.structure import is_connected, is_unicyclic, line_graph
from matching.blossom import matching_number
from nullity.engine import (
    NullityCase,
    ZeroNullityCase,
    per_nullity_structural,
    with_oracle,
    zero_nullity_characterization,
)
from nullity.theorems import (
    line_graph_matching_check,
    line_graph_nullity_check,
    unicyclic_nullity,
    unicyclic_zero_check,
)
from nullity.witness import odd_cycle_cover, structural_sachs_subgraph
from permanent.sachs import per_nullity_oracle
from tests.conftest import complete, cycle, path
from utils.log import PreconditionError
from verify.corpus import enumerate_connected_graphs, enumerate_labeled_graphs
from verify.generators import random_tree_plus, random_unicyclic

SMALL_GRAPHS = [g for n in range(0, 6) for g in enumerate_labeled_graphs(n)]


@pytest.mark.parametrize(
    "g, eta, case",
    [
        (complete(2), 0, [NullityCase.PERFECT_MATCHING]),
        (Graph.empty(3), 3, [NullityCase.F_EMPTY] * 3),
        (cycle(3), 0, [NullityCase.GENERAL]),
        (path(3), 1, [NullityCase.F_EMPTY]),
        (cycle(4), 0, [NullityCase.PERFECT_MATCHING]),
    ],
)
def test_structural_nullity(g, eta, case):
    report = per_nullity_structural(g)
    assert report.eta_structural == eta
    assert report.cases == case


def test_general_case_subtracts_m(triangle_pendant_path):
    report = per_nullity_structural(triangle_pendant_path)
    assert report.nu == 2
    assert report.m_stat == 1
    assert report.eta_structural == 0
    assert report.cases == [NullityCase.GENERAL]


def test_report_sums_over_components():
    # a triangle, an isolated vertex and an edge
    g = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (4, 5)])
    report = per_nullity_structural(g)
    assert [c.vertices for c in report.components] == [(0, 1, 2), (3,), (4, 5)]
    assert [c.eta for c in report.components] == [0, 1, 0]
    assert report.eta_structural == 1
    assert report.nu == 2


def test_report_dict_field_order(c3):
    report = with_oracle(per_nullity_structural(c3), c3)
    record = report.to_dict()
    assert list(record) == ["graph6", "n", "nu", "m_stat", "eta_structural", "eta_oracle", "case_fired", "components"]
    assert record["graph6"] == "Bw"
    assert record["eta_oracle"] == 0
    assert "eta_oracle" not in per_nullity_structural(c3).to_dict()


def test_structural_nullity_matches_oracle_on_small_graphs():
    for g in SMALL_GRAPHS:
        assert per_nullity_structural(g).eta_structural == per_nullity_oracle(g)


def test_structural_nullity_matches_oracle_on_random_graphs():
    for seed in range(30):
        g = random_tree_plus(11, 0.15, seed)
        assert per_nullity_structural(g).eta_structural == per_nullity_oracle(g)


def test_nullity_bounds():
    for g in SMALL_GRAPHS:
        report = per_nullity_structural(g)
        assert 0 <= report.eta_structural <= g.n - 2 * report.nu
        if g.num_edges:
            assert report.eta_structural <= g.n - 2


@pytest.mark.parametrize(
    "g, verdict, case",
    [
        (complete(2), True, ZeroNullityCase.PERFECT_MATCHING),
        (cycle(5), True, ZeroNullityCase.NO_ISOLATED_IN_D),
        (path(3), False, None),
        (Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)]), False, None),
    ],
)
def test_zero_nullity_characterization(g, verdict, case):
    assert zero_nullity_characterization(g) == (verdict, case)


def test_zero_nullity_by_covering_singletons(triangle_pendant_path):
    assert zero_nullity_characterization(triangle_pendant_path) == (True, ZeroNullityCase.SINGLETONS_COVERABLE)


def test_zero_nullity_characterization_on_small_connected_graphs():
    for n in range(2, 6):
        for g in enumerate_connected_graphs(n):
            verdict, _ = zero_nullity_characterization(g)
            assert verdict == (per_nullity_oracle(g) == 0)


def test_zero_nullity_characterization_preconditions():
    with pytest.raises(PreconditionError):
        zero_nullity_characterization(Graph.empty(1))
    with pytest.raises(PreconditionError):
        zero_nullity_characterization(Graph.empty(2))


@pytest.mark.parametrize(
    "fixture, eta, zero",
    [
        ("triangle_two_pendants", 1, False),
        ("triangle_pendant_path", 0, True),
        ("c4", 0, True),
        ("c3", 0, True),
        ("paw", 0, True),
    ],
)
def test_unicyclic_examples(request, fixture, eta, zero):
    g = request.getfixturevalue(fixture)
    assert unicyclic_nullity(g) == eta
    assert unicyclic_zero_check(g) == zero


def test_unicyclic_theorems_on_random_graphs():
    for n in range(3, 13):
        for seed in range(15):
            g = random_unicyclic(n, seed)
            assert is_unicyclic(g)
            eta = per_nullity_oracle(g)
            bound = n - 2 * matching_number(g)
            assert bound - 1 <= eta <= bound
            assert unicyclic_nullity(g) == eta == per_nullity_structural(g).eta_structural
            assert unicyclic_zero_check(g) == (eta == 0)


def test_unicyclic_checks_need_unicyclic_graph(p3):
    with pytest.raises(PreconditionError):
        unicyclic_nullity(p3)
    with pytest.raises(PreconditionError):
        unicyclic_zero_check(complete(4))


@pytest.mark.parametrize(
    "g, perfect, near, critical",
    [
        (path(3), True, False, False),
        (cycle(3), False, True, True),
        (complete(4), True, False, False),
        (Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)]), False, True, True),
        (cycle(5), False, True, True),
    ],
)
def test_line_graph_matching(g, perfect, near, critical):
    record = line_graph_matching_check(g)
    assert record.lg_perfect == perfect
    assert record.lg_near_perfect == near
    assert record.lg_factor_critical == critical
    assert record.violations() == []


def test_line_graph_statements_on_small_connected_graphs():
    for n in range(2, 6):
        for g in enumerate_connected_graphs(n):
            assert line_graph_matching_check(g).violations() == []
            assert line_graph_nullity_check(g) in (0, 1)


def test_line_graph_nullity_examples(star, c4):
    assert line_graph_nullity_check(star) == 0
    assert line_graph_nullity_check(path(3)) == 0
    assert line_graph_nullity_check(path(4)) == 1
    assert line_graph_nullity_check(c4) == 0


def test_line_graph_checks_preconditions():
    with pytest.raises(PreconditionError):
        line_graph_matching_check(Graph.from_edges(4, [(0, 1), (2, 3)]))
    with pytest.raises(PreconditionError):
        line_graph_nullity_check(Graph.empty(1))


def test_odd_cycle_cover_of_factor_critical_graph(c5):
    c, rest = odd_cycle_cover(c5, c5.vertex_mask)
    assert c.is_odd and c.is_valid_in(c5)
    assert c.length + 2 * len(rest) == 5
    k5 = complete(5)
    c, rest = odd_cycle_cover(k5, k5.vertex_mask)
    assert c.is_odd and c.is_valid_in(k5)
    assert c.length + 2 * len(rest) == 5


def test_structural_sachs_subgraph_on_small_graphs():
    for g in SMALL_GRAPHS:
        s = structural_sachs_subgraph(g)
        assert s.is_valid_in(g)
        assert s.order == g.n - per_nullity_structural(g).eta_structural


def test_structural_sachs_subgraph_on_line_graphs():
    for seed in range(10):
        g = random_tree_plus(7, 0.2, seed)
        lg, _ = line_graph(g)
        if lg.n > 16 or not is_connected(g):
            continue
        s = structural_sachs_subgraph(lg)
        assert s.is_valid_in(lg)
        assert lg.n - s.order == per_nullity_oracle(lg, allow_large=True)
