import json

import pytest
from click.testing import CliRunner

import cli
from verify.checks import CHECKS


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()


def invoke(runner: CliRunner, *args, input=None):
    return runner.invoke(cli.main, ["-q", *args], input=input)


def test_nullity_from_stdin(runner):
    result = invoke(runner, "nullity", "-f", "json", input="Bw\n")
    assert result.exit_code == 0, result.output
    record = json.loads(result.stdout)
    assert record["graph6"] == "Bw"
    assert record["eta_structural"] == 0


@pytest.mark.parametrize("graph6, eta", [("A_", 0), ("B?", 3), ("Bw", 0), ("Bg", 1)])
def test_nullity_examples(runner, graph6, eta):
    result = invoke(runner, "nullity", "-f", "json", graph6)
    assert result.exit_code == 0, result.output
    assert json.loads(result.stdout)["eta_structural"] == eta


def test_nullity_jsonl_with_oracle(runner):
    result = invoke(runner, "nullity", "--oracle", "-f", "jsonl", "Bw", "B?", "A_")
    assert result.exit_code == 0, result.output
    records = [json.loads(line) for line in result.stdout.splitlines()]
    assert [r["graph6"] for r in records] == ["Bw", "B?", "A_"]
    assert [r["eta_oracle"] for r in records] == [0, 3, 0]
    assert records[1]["case_fired"] == ["F_EMPTY"] * 3


def test_nullity_text(runner):
    result = invoke(runner, "nullity", "Bw")
    assert result.exit_code == 0, result.output
    assert "eta=0" in result.stdout
    assert "cases=GENERAL" in result.stdout


def test_nullity_json_is_byte_identical_across_runs(runner):
    first = invoke(runner, "nullity", "-f", "jsonl", "Bw", "Bg").stdout
    assert first == invoke(runner, "nullity", "-f", "jsonl", "Bw", "Bg").stdout


def test_input_file_and_edge_list(runner, tmp_path):
    graphs = tmp_path / "graphs.g6"
    graphs.write_text("Bw\n\nA_\n")
    result = invoke(runner, "nullity", "-f", "jsonl", "--input", str(graphs))
    assert result.exit_code == 0, result.output
    assert len(result.stdout.splitlines()) == 2

    edges = tmp_path / "pendant_path.txt"
    edges.write_text("# triangle with a pendant path\n5\n0 1\n0 2\n1 2\n0 3\n3 4\n")
    result = invoke(runner, "nullity", "-f", "json", "--edges", str(edges))
    assert result.exit_code == 0, result.output
    record = json.loads(result.stdout)
    assert record["eta_structural"] == 0
    assert record["m_stat"] == 1


def test_stdin_through_dash(runner):
    result = invoke(runner, "nullity", "-f", "json", "-i", "-", input="A_\n")
    assert result.exit_code == 0, result.output
    assert json.loads(result.stdout)["n"] == 2


def test_parse_error_exits_2(runner, tmp_path):
    graphs = tmp_path / "graphs.g6"
    graphs.write_text("Bw\nBx\n")
    result = invoke(runner, "nullity", "--input", str(graphs))
    assert result.exit_code == 2


def test_non_ascii_stdin_exits_2(runner):
    result = invoke(runner, "nullity", input=b"Bw\n\xc3\xa9\n")
    assert result.exit_code == 2
    assert "non-ASCII" in result.output
    assert "line 2" in result.output


def test_edge_list_error_exits_2(runner, tmp_path):
    edges = tmp_path / "bad.txt"
    edges.write_text("3\n0 5\n")
    assert invoke(runner, "nullity", "--edges", str(edges)).exit_code == 2


def test_exactly_one_input_source(runner, tmp_path):
    graphs = tmp_path / "graphs.g6"
    graphs.write_text("Bw\n")
    assert invoke(runner, "nullity", "Bw", "--input", str(graphs)).exit_code == 2


def test_unknown_flag_is_rejected(runner):
    assert invoke(runner, "nullity", "--no-such-flag", "Bw").exit_code == 2


def test_decompose_path(runner):
    result = invoke(runner, "decompose", "-f", "json", "Bg")
    assert result.exit_code == 0, result.output
    record = json.loads(result.stdout)
    assert record["D"] == [0, 2]
    assert record["B"] == [1]
    assert record["C"] == []
    assert record["nu_formula"] == record["nu"] == 1
    assert record["violations"] == []


def test_decompose_odd_cycle(runner):
    # C5: 0-1-2-3-4-0
    result = invoke(runner, "decompose", "-f", "json", "Dhc")
    assert result.exit_code == 0, result.output
    record = json.loads(result.stdout)
    assert record["D"] == [0, 1, 2, 3, 4]
    assert record["F"] == [[0, 1, 2, 3, 4]]


@pytest.mark.parametrize(
    "graph6, expected",
    [("Bw", "1 0 3 -2"), ("A_", "1 0 1"), ("A?", "1 0 0")],
)
@pytest.mark.parametrize("method", ["sachs", "interp", "both"])
def test_polynomial(runner, graph6, expected, method):
    result = invoke(runner, "polynomial", "--method", method, graph6)
    assert result.exit_code == 0, result.output
    assert result.stdout.strip() == expected


def test_polynomial_json_uses_strings(runner):
    result = invoke(runner, "polynomial", "-f", "json", "Bw")
    record = json.loads(result.stdout)
    assert record["coefficients"] == ["1", "0", "3", "-2"]
    assert record["nullity"] == 0


def test_polynomial_guard_exits_3(runner):
    empty21 = "T" + "?" * 35
    assert invoke(runner, "polynomial", empty21).exit_code == 3
    k12 = "K" + "~" * 11
    assert invoke(runner, "polynomial", "-m", "sachs", k12).exit_code == 3
    assert invoke(runner, "nullity", "--oracle", k12).exit_code == 3
    assert invoke(runner, "sachs", k12).exit_code == 3


def test_sachs(runner):
    result = invoke(runner, "sachs", "-f", "json", "Bw")
    assert result.exit_code == 0, result.output
    record = json.loads(result.stdout)
    assert record["search"]["covered"] == 3
    assert record["structural"]["covered"] == 3
    assert [sorted(c) for c in record["structural"]["cycles"]] == [[0, 1, 2]]


def test_verify_all_labeled(runner):
    result = invoke(runner, "verify", "--all-labeled", "5", "--checks", "oracle_equivalence")
    assert result.exit_code == 0, result.output


def test_verify_unicyclic(runner):
    result = invoke(
        runner,
        "verify", "--unicyclic", "1000", "--n", "12", "--seed", "7",
        "--checks", "unicyclic_sandwich,unicyclic_thm",
    )
    assert result.exit_code == 0, result.output


def test_verify_unknown_check_exits_2(runner):
    assert invoke(runner, "verify", "--checks", "no_such_check").exit_code == 2
    assert invoke(runner, "verify", "--all-labeled", "3", "--checks", "no_such_check").exit_code == 2


def test_verify_needs_one_corpus(runner):
    assert invoke(runner, "verify", "--all-labeled", "3", "--gnp", "5", "--n", "4").exit_code == 2
    assert invoke(runner, "verify", "--gnp", "5").exit_code == 2


def test_verify_guard_exits_3(runner):
    assert invoke(runner, "verify", "--all-labeled", "8", "--checks", "nullity_bound").exit_code == 3


def test_verify_json_report_file(runner, tmp_path):
    out = tmp_path / "report.json"
    result = invoke(
        runner,
        "verify", "--tree-plus", "20", "--n", "8", "--n-min", "4", "--seed", "1", "-p", "0.3",
        "--checks", "oracle_equivalence,structural_witness", "-f", "json", "-o", str(out),
    )
    assert result.exit_code == 0, result.output
    record = json.loads(out.read_text())
    assert record["graphs"] == 20
    assert record["corpus"]["n_min"] == 4
    assert record["checks"]["structural_witness"]["passed"] == 20


def test_verify_failures_exit_1(runner, monkeypatch):
    monkeypatch.setitem(CHECKS, "nullity_bound", lambda facts: (True, False))
    result = invoke(runner, "verify", "--all-labeled", "2", "--checks", "nullity_bound", "-f", "json")
    assert result.exit_code == 1


def test_threads_from_environment(runner, monkeypatch):
    monkeypatch.setenv("PERNULL_THREADS", "not-a-number")
    assert invoke(runner, "verify", "--all-labeled", "2", "--checks", "nullity_bound").exit_code == 2
