import json

import pytest

from core.formats import to_graph6
from core.graph import Graph
from core.structure import is_connected, is_unicyclic, line_graph
from matching.blossom import is_factor_critical
from tests.conftest import complete
from utils.log import ArgumentError, ScaleGuardError
from utils.process import worker_count
from verify import harness
from verify.checks import CHECKS, GraphFacts
from verify.corpus import CorpusKind, CorpusSpec, generate, labeled_graph_count
from verify.generators import make_rng, random_tree, random_unicyclic, tree_from_pruefer
from verify.harness import (
    CHUNK_SIZE,
    CHUNKS_PER_WORKER,
    MAX_REPORTED_FAILURES,
    check_graph,
    plain,
    resolve_checks,
    run_verification,
)


def test_pruefer_decoding():
    assert sorted(tuple(sorted(e)) for e in tree_from_pruefer([3, 3, 3], 5)) == [(0, 3), (1, 3), (2, 3), (3, 4)]
    assert sorted(tuple(sorted(e)) for e in tree_from_pruefer([1, 2], 4)) == [(0, 1), (1, 2), (2, 3)]


def test_random_trees_are_trees():
    for seed in range(20):
        t = random_tree(9, seed)
        assert t.num_edges == 8
        assert is_connected(t)


def test_seeded_generators_are_reproducible():
    assert random_unicyclic(12, 7) == random_unicyclic(12, 7)
    assert make_rng(2 ** 64 + 5).integers(0, 1000) == make_rng(5).integers(0, 1000)


def test_random_unicyclic():
    assert random_unicyclic(3, 0) == Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
    for seed in range(50):
        assert is_unicyclic(random_unicyclic(8, seed))


def test_corpus_is_reproducible():
    spec = CorpusSpec(CorpusKind.RANDOM_GNP, 4, 9, count=25, seed=42, p=0.3)
    first = [to_graph6(g) for g in generate(spec)]
    assert first == [to_graph6(g) for g in generate(spec)]
    assert len(first) == 25
    assert all(4 <= g.n <= 9 for g in generate(spec))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_all_labeled_corpus_size(n):
    graphs = list(generate(CorpusSpec(CorpusKind.ALL_LABELED, n, n)))
    assert len(graphs) == labeled_graph_count(n)


def test_factor_critical_corpus():
    graphs = list(generate(CorpusSpec(CorpusKind.FACTOR_CRITICAL_FILTER, 1, 5)))
    assert graphs[0] == Graph.empty(1)
    assert all(g.n % 2 == 1 and is_factor_critical(g) for g in graphs)
    assert sum(1 for g in graphs if g.n == 3) == 1


def test_line_graph_corpus():
    graphs = list(generate(CorpusSpec(CorpusKind.LINE_GRAPHS_OF, 5, 5, count=10, seed=1, p=0.1)))
    assert len(graphs) == 10
    assert all(g.n >= 4 for g in graphs)


@pytest.mark.parametrize(
    "spec",
    [
        CorpusSpec(CorpusKind.ALL_LABELED, 3, 2),
        CorpusSpec(CorpusKind.RANDOM_GNP, 3, 5, count=1, p=1.5),
        CorpusSpec(CorpusKind.RANDOM_UNICYCLIC, 2, 5, count=1),
        CorpusSpec(CorpusKind.RANDOM_GNP, 3, 5, count=-1),
    ],
)
def test_invalid_corpus_specs(spec):
    with pytest.raises(ArgumentError):
        spec.validate()


def test_exhaustive_corpus_is_guarded():
    with pytest.raises(ScaleGuardError):
        CorpusSpec(CorpusKind.ALL_LABELED, 1, 8).validate()
    CorpusSpec(CorpusKind.ALL_LABELED, 1, 8).validate(allow_large=True)


def test_resolve_checks():
    assert resolve_checks(["zero_nullity", "oracle_equivalence"]) == ["oracle_equivalence", "zero_nullity"]
    with pytest.raises(ArgumentError):
        resolve_checks(["no_such_check"])
    with pytest.raises(ArgumentError):
        resolve_checks([])


def test_every_check_passes_or_skips_on_small_graphs():
    names = list(CHECKS)
    for n in range(0, 5):
        for g in generate(CorpusSpec(CorpusKind.ALL_LABELED, n, n)):
            for name, status, expected, got in check_graph(g, names):
                assert status in ("passed", "skipped"), f"{to_graph6(g)} {name}: {expected} != {got}"


def test_hypothesis_checks_skip_outside_their_class(p3, c5):
    facts = GraphFacts(p3)
    assert CHECKS["unicyclic_thm"](facts) is None
    assert CHECKS["factor_critical"](facts) is None
    assert CHECKS["additivity"](facts) is None
    assert CHECKS["factor_critical"](GraphFacts(Graph.empty(1))) is None
    assert CHECKS["factor_critical"](GraphFacts(c5)) is not None


def test_oracle_equivalence_on_all_labeled_graphs():
    result = run_verification(CorpusSpec(CorpusKind.ALL_LABELED, 1, 5), ["oracle_equivalence"])
    assert result.ok
    assert result.graphs == 1 + 2 + 8 + 64 + 1024
    assert result.checks["oracle_equivalence"] == {"passed": result.graphs, "failed": 0, "skipped": 0}


def test_unicyclic_acceptance_sample():
    spec = CorpusSpec(CorpusKind.RANDOM_UNICYCLIC, 12, 12, count=100, seed=7)
    result = run_verification(spec, ["unicyclic_sandwich", "unicyclic_thm", "unicyclic_zero"])
    assert result.ok
    assert result.checks["unicyclic_thm"]["passed"] == 100


def test_theorem_checks_on_connected_graphs():
    spec = CorpusSpec(CorpusKind.ALL_CONNECTED_LABELED, 2, 5)
    names = ["gallai_edmonds", "d_definition", "m_statistic", "zero_nullity", "matching_bound",
             "line_graph_matching", "line_graph_nullity", "structural_witness", "max_sachs"]
    result = run_verification(spec, names)
    assert result.ok, result.to_table()
    assert result.checks["zero_nullity"]["skipped"] == 0


def test_parallel_run_matches_sequential():
    spec = CorpusSpec(CorpusKind.RANDOM_TREE_PLUS, 6, 10, count=40, seed=3, p=0.2)
    names = ["oracle_equivalence", "sachs_vs_interpolation", "factor_critical"]
    sequential = run_verification(spec, names, workers=1)
    parallel = run_verification(spec, names, workers=2)
    assert sequential.to_json() == parallel.to_json()


def test_failures_are_capped_and_sorted(monkeypatch):
    monkeypatch.setitem(CHECKS, "oracle_equivalence", lambda facts: (0, 1))
    result = run_verification(CorpusSpec(CorpusKind.ALL_LABELED, 1, 4), ["oracle_equivalence"])
    assert not result.ok
    assert result.checks["oracle_equivalence"]["failed"] == 75
    assert len(result.failures) == 75
    assert not result.truncated
    graph6 = [f.graph6 for f in result.failures]
    assert graph6 == sorted(graph6)

    result = run_verification(CorpusSpec(CorpusKind.ALL_LABELED, 5, 5), ["oracle_equivalence"])
    assert result.truncated
    assert len(result.failures) == MAX_REPORTED_FAILURES


def test_result_json_is_stable():
    spec = CorpusSpec(CorpusKind.RANDOM_GNP, 5, 5, count=10, seed=9)
    record = json.loads(run_verification(spec, ["nullity_bound"]).to_json())
    assert record["corpus"]["kind"] == "RANDOM_GNP"
    assert record["graphs"] == 10
    assert record["failures"] == []
    assert run_verification(spec, ["nullity_bound"]).to_json() == run_verification(spec, ["nullity_bound"]).to_json()


def test_plain_values():
    assert plain((1, (2, 3))) == [1, [2, 3]]
    assert plain(2 ** 60) == str(2 ** 60)
    assert plain(-5) == -5
    assert plain(True) is True
    assert plain({1: (4,)}) == {"1": [4]}


def test_worker_count(monkeypatch):
    monkeypatch.delenv("PERNULL_THREADS", raising=False)
    assert worker_count() == 1
    monkeypatch.setenv("PERNULL_THREADS", "1")
    assert worker_count() == 1
    monkeypatch.setenv("PERNULL_THREADS", "many")
    with pytest.raises(ArgumentError):
        worker_count()
    with pytest.raises(ArgumentError):
        worker_count(0)


def test_parallel_run_streams_the_corpus(monkeypatch):
    pulled = []
    at_first_result = []
    generate_all = harness.generate
    collect = harness._collect

    def counting(spec, allow_large=False):
        for g in generate_all(spec, allow_large):
            pulled.append(g)
            yield g

    def first_result_noted(result, failures, outcomes):
        def noted():
            for outcome in outcomes:
                if not at_first_result:
                    at_first_result.append(len(pulled))
                yield outcome

        collect(result, failures, noted())

    monkeypatch.setattr(harness, "generate", counting)
    monkeypatch.setattr(harness, "_collect", first_result_noted)
    result = run_verification(CorpusSpec(CorpusKind.ALL_LABELED, 5, 5), ["nullity_bound"], workers=2)
    assert result.ok
    assert result.graphs == len(pulled) == 1024
    assert at_first_result[0] <= 2 * CHUNKS_PER_WORKER * CHUNK_SIZE < 1024


def test_checks_above_a_guard_are_skipped():
    outcomes = check_graph(Graph.empty(21), ["oracle_equivalence", "sachs_vs_interpolation", "nullity_bound"])
    assert [status for _, status, _, _ in outcomes] == ["skipped", "skipped", "passed"]

    # L(K6): 15 vertices, far too many cycles for the Sachs oracle
    lg, _ = line_graph(complete(6))
    outcomes = check_graph(lg, ["oracle_equivalence", "m_statistic", "nullity_bound"])
    assert [status for _, status, _, _ in outcomes] == ["skipped", "skipped", "passed"]
