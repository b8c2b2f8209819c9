"""Script Orchestrator"""
import functools
import logging
import sys
from pathlib import Path

import click

from core.formats import parse_edge_list, parse_graph6
from core.graph import Graph
from matching.gallai_edmonds import check_gallai_edmonds, gallai_edmonds
from nullity.engine import per_nullity_structural, with_oracle
from nullity.witness import structural_sachs_subgraph
from permanent.polynomial import perm_polynomial_interpolation
from permanent.sachs import max_sachs_subgraph, perm_polynomial_sachs
from verify.checks import CHECKS
from verify.corpus import CorpusKind, CorpusSpec
from verify.harness import run_verification

import utils as u

FORMATS = ("text", "json", "jsonl")


def exit_on_error(command):
    """Turn a PernullError into its exit status, after logging it"""

    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except u.PernullError as e:
            logging.getLogger().critical(e.message)
            sys.exit(e.exit_code)

    return wrapper


def graph_input(command):
    """Shared input options: inline graph6 arguments, a graph6 file, an edge-list file, or stdin"""
    command = click.option(
        "-e",
        "--edges",
        "edges_path",
        default=None,
        type=click.Path(exists=True, dir_okay=False, path_type=Path),
        help="Edge-list file: vertex count on the first line, then one 'u v' pair per line",
    )(command)
    command = click.option(
        "-i",
        "--input",
        "input_path",
        default=None,
        type=click.Path(dir_okay=False, allow_dash=True, path_type=Path),
        help="File with one graph6 string per line ('-' for stdin)",
    )(command)
    return click.argument("graph6", nargs=-1)(command)


def output_format(command):
    return click.option(
        "-f",
        "--format",
        "fmt",
        default="text",
        type=click.Choice(FORMATS, case_sensitive=False),
        help="Report format. Default is text",
    )(command)


def load_graphs(graph6: tuple[str, ...], input_path: Path | None, edges_path: Path | None) -> list[Graph]:
    """
    Read the graphs of the single input source.

    Raises:
        ArgumentError: more than one source given
        GraphFormatError: naming the offending line
    """
    given = sum([bool(graph6), input_path is not None, edges_path is not None])
    if given > 1:
        raise u.ArgumentError("give exactly one input source: graph6 arguments, --input or --edges")
    if edges_path is not None:
        return [parse_edge_list(u.read_text(edges_path))]
    lines = list(enumerate(graph6, start=1)) if graph6 else list(u.numbered_lines(u.read_text(input_path)))
    graphs = []
    for number, line in lines:
        try:
            graphs.append(parse_graph6(line))
        except u.GraphFormatError as e:
            raise u.GraphFormatError(e.message, line=number)
    if not graphs:
        raise u.ArgumentError("no graph in input")
    logging.getLogger().info(f"Loaded {len(graphs)} graph(s)")
    return graphs


def render(records: list[dict], texts: list[str], fmt: str) -> str:
    if fmt == "jsonl":
        return u.to_jsonl(records)
    if fmt == "json":
        return u.to_json(records[0] if len(records) == 1 else records, pretty=True)
    return "\n".join(texts)


@click.group()
@click.option(
    "-l",
    "--log-dir",
    default=None,
    type=click.Path(exists=True, file_okay=False, path_type=Path),
    help="Directory where to save logs. If None, logs are printed in stderr only",
)
@click.option(
    "-q",
    "--quiet",
    default=False,
    is_flag=True,
    help="Set logging level to WARNING, default is INFO",
)
@click.option(
    "-v",
    "--verbose",
    default=False,
    is_flag=True,
    help="Set logging level to DEBUG",
)
@click.option(
    "--unsafe-override-guards",
    "allow_large",
    default=False,
    is_flag=True,
    help="Run exponential algorithms above their size guards",
)
@click.pass_context
def main(ctx: click.core.Context, log_dir: Path | None, quiet: bool, verbose: bool, allow_large: bool):
    """CLI endpoint. Per-nullity of graphs, structurally and by brute force."""

    #initialize logger
    level = logging.WARNING if quiet else logging.DEBUG if verbose else logging.INFO
    logger = u.config_logger(log_dir=log_dir, level=level)
    logger.debug("Starting main.")

    ctx.obj = {
        "logger": logger,
        "allow_large": allow_large,
    }


@main.command()
@graph_input
@output_format
@click.option(
    "--oracle",
    default=False,
    is_flag=True,
    help="Also compute the nullity from the permanental polynomial and compare",
)
@click.pass_context
@exit_on_error
def nullity(ctx: click.core.Context, graph6, input_path, edges_path, fmt: str, oracle: bool):
    """Per-nullity from maximum matchings and the Gallai-Edmonds decomposition"""
    logger = ctx.obj["logger"]
    allow_large = ctx.obj["allow_large"]

    records, texts = [], []
    for g in load_graphs(graph6, input_path, edges_path):
        report = per_nullity_structural(g)
        if oracle:
            report = with_oracle(report, g, allow_large=allow_large)
        records.append(report.to_dict())
        line = f"{report.graph6}\teta={report.eta_structural}\tn={report.n}\tnu={report.nu}\tM={report.m_stat}"
        if report.eta_oracle is not None:
            line += f"\toracle={report.eta_oracle}"
        texts.append(line + "\tcases=" + ",".join(c.value for c in report.cases))
    logger.info(f"Computed per-nullity of {len(records)} graph(s)")
    u.emit(render(records, texts, fmt))


@main.command()
@graph_input
@output_format
@click.pass_context
@exit_on_error
def decompose(ctx: click.core.Context, graph6, input_path, edges_path, fmt: str):
    """Gallai-Edmonds decomposition: D, B, C, components of G[D], singletons D0 and F"""
    records, texts = [], []
    for g in load_graphs(graph6, input_path, edges_path):
        dec = gallai_edmonds(g)
        record = dec.to_dict()
        record["nu_formula"] = dec.predicted_nu()
        record["violations"] = check_gallai_edmonds(g, dec)
        records.append(record)
        texts.append("\n".join(f"{key}: {value}" for key, value in record.items()))
    u.emit(render(records, texts, fmt))


@main.command()
@graph_input
@output_format
@click.option(
    "-m",
    "--method",
    default="sachs",
    type=click.Choice(["sachs", "interp", "both"], case_sensitive=False),
    help="Sachs subgraph expansion, exact interpolation of per(xI - A), or both (must agree)",
)
@click.pass_context
@exit_on_error
def polynomial(ctx: click.core.Context, graph6, input_path, edges_path, fmt: str, method: str):
    """Coefficients b_0..b_n of the permanental polynomial"""
    allow_large = ctx.obj["allow_large"]

    records, texts = [], []
    for g in load_graphs(graph6, input_path, edges_path):
        poly = None
        if method in ("sachs", "both"):
            poly = perm_polynomial_sachs(g, allow_large=allow_large)
        if method in ("interp", "both"):
            interp = perm_polynomial_interpolation(g, allow_large=allow_large)
            if poly is not None and poly != interp:
                raise u.InvariantViolationError(
                    f"Sachs expansion {list(poly.coeffs)} and interpolation {list(interp.coeffs)} disagree"
                )
            poly = interp
        records.append({"n": g.n, "coefficients": poly.to_strings(), "nullity": poly.nullity})
        texts.append(" ".join(poly.to_strings()))
    u.emit(render(records, texts, fmt))


@main.command()
@graph_input
@output_format
@click.pass_context
@exit_on_error
def sachs(ctx: click.core.Context, graph6, input_path, edges_path, fmt: str):
    """Maximum Sachs subgraph, by exhaustive search and by structural construction"""
    allow_large = ctx.obj["allow_large"]

    records, texts = [], []
    for g in load_graphs(graph6, input_path, edges_path):
        searched = max_sachs_subgraph(g, allow_large=allow_large)
        built = structural_sachs_subgraph(g)
        if searched.order != built.order:
            raise u.InvariantViolationError(
                f"search covers {searched.order} vertices but the structural subgraph covers {built.order}"
            )
        records.append({"n": g.n, "search": searched.to_dict(), "structural": built.to_dict()})
        texts.append(
            f"covered {built.order} of {g.n}\tedges={list(built.edges)}\tcycles={[list(c.vertices) for c in built.cycles]}"
        )
    u.emit(render(records, texts, fmt))


@main.command()
@click.option("--all-labeled", type=int, default=None, help="Every labeled graph up to N vertices")
@click.option("--connected", type=int, default=None, help="Every connected labeled graph up to N vertices")
@click.option("--factor-critical", type=int, default=None, help="Every factor-critical labeled graph up to N vertices")
@click.option("--unicyclic", type=int, default=None, help="COUNT random unicyclic graphs")
@click.option("--gnp", type=int, default=None, help="COUNT random G(n, p) graphs")
@click.option("--tree-plus", type=int, default=None, help="COUNT random connected graphs (tree plus chords)")
@click.option("--line-graphs", type=int, default=None, help="COUNT line graphs of random connected graphs")
@click.option("-n", "--n", "n_max", type=int, default=None, help="Vertex count (maximum) of random graphs")
@click.option("--n-min", type=int, default=None, help="Minimum vertex count. Default: 1 for exhaustive corpora, --n otherwise")
@click.option("-s", "--seed", type=int, default=0, help="64-bit seed of random corpora. Default is 0")
@click.option("-p", "--p", "p", type=float, default=0.5, help="Edge (or chord) probability. Default is 0.5")
@click.option("-c", "--checks", default=",".join(CHECKS), help="Comma-separated check names. Default: all")
@click.option(
    "-t",
    "--threads",
    type=int,
    default=None,
    envvar=u.THREADS_ENV,
    help="Worker processes. Default is 1",
)
@click.option("--progress", default=False, is_flag=True, help="Show a progress bar")
@output_format
@click.option(
    "-o",
    "--output",
    "output_path",
    default=None,
    type=click.Path(dir_okay=False, path_type=Path),
    help="Output file. If None, the report is printed in stdout",
)
@click.pass_context
@exit_on_error
def verify(
    ctx: click.core.Context,
    all_labeled: int | None,
    connected: int | None,
    factor_critical: int | None,
    unicyclic: int | None,
    gnp: int | None,
    tree_plus: int | None,
    line_graphs: int | None,
    n_max: int | None,
    n_min: int | None,
    seed: int,
    p: float,
    checks: str,
    threads: int | None,
    progress: bool,
    fmt: str,
    output_path: Path | None,
):
    """Run checks over an exhaustive or seeded random corpus; exit 1 on any failure"""
    logger = ctx.obj["logger"]

    exhaustive = {
        CorpusKind.ALL_LABELED: all_labeled,
        CorpusKind.ALL_CONNECTED_LABELED: connected,
        CorpusKind.FACTOR_CRITICAL_FILTER: factor_critical,
    }
    sampled = {
        CorpusKind.RANDOM_UNICYCLIC: unicyclic,
        CorpusKind.RANDOM_GNP: gnp,
        CorpusKind.RANDOM_TREE_PLUS: tree_plus,
        CorpusKind.LINE_GRAPHS_OF: line_graphs,
    }
    chosen = [(kind, value) for kind, value in {**exhaustive, **sampled}.items() if value is not None]
    if len(chosen) != 1:
        raise u.ArgumentError("choose exactly one corpus: --all-labeled, --connected, --factor-critical, "
                              "--unicyclic, --gnp, --tree-plus or --line-graphs")
    kind, value = chosen[0]
    if kind.exhaustive:
        spec = CorpusSpec(kind, 1 if n_min is None else n_min, value)
    else:
        if n_max is None:
            raise u.ArgumentError("--n is required with a random corpus")
        spec = CorpusSpec(kind, n_max if n_min is None else n_min, n_max, count=value, seed=seed, p=p)

    names = [name.strip() for name in checks.split(",") if name.strip()]
    result = run_verification(
        spec,
        names,
        workers=u.worker_count(threads),
        allow_large=ctx.obj["allow_large"],
        progress=progress,
    )
    report = result.to_table() if fmt == "text" else result.to_json()
    u.emit(report, output_path)
    if not result.ok:
        logger.error(f"{result.failed} check failure(s)")
        sys.exit(1)


if __name__ == "__main__":
    main()
