"""Run named checks over a corpus and aggregate the outcome"""
from __future__ import annotations

import json
import logging
from collections import deque
from collections.abc import Iterable, Iterator
from concurrent.futures import Executor, ProcessPoolExecutor
from itertools import islice
from dataclasses import dataclass, field
from enum import Enum

from tqdm import tqdm

from core.formats import describe
from core.graph import Graph
from utils.log import ArgumentError, PernullError, ScaleGuardError
from verify.checks import CHECKS, GraphFacts
from verify.corpus import CorpusSpec, generate

logger = logging.getLogger()

MAX_REPORTED_FAILURES = 100
CHUNK_SIZE = 64
# chunks in flight per worker
CHUNKS_PER_WORKER = 4
_SAFE_INT = 2 ** 53


@dataclass(frozen=True)
class Failure:
    graph6: str
    check: str
    expected: object
    got: object

    def to_dict(self) -> dict:
        return {"graph6": self.graph6, "check": self.check, "expected": self.expected, "got": self.got}


@dataclass
class VerifyResult:
    """Counts per check, plus the failing graphs sorted by graph6"""
    corpus: dict
    graphs: int = 0
    checks: dict[str, dict[str, int]] = field(default_factory=dict)
    failures: list[Failure] = field(default_factory=list)
    truncated: bool = False

    @property
    def ok(self) -> bool:
        return not self.failures

    @property
    def failed(self) -> int:
        return sum(c["failed"] for c in self.checks.values())

    def to_dict(self) -> dict:
        return {
            "corpus": self.corpus,
            "graphs": self.graphs,
            "checks": self.checks,
            "failures": [f.to_dict() for f in self.failures],
            "truncated": self.truncated,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def to_table(self) -> str:
        width = max([len(name) for name in self.checks] + [5])
        lines = [f"{'check':<{width}}  {'passed':>8}  {'failed':>8}  {'skipped':>8}"]
        for name, counts in self.checks.items():
            lines.append(f"{name:<{width}}  {counts['passed']:>8}  {counts['failed']:>8}  {counts['skipped']:>8}")
        lines.append(f"{self.graphs} graphs, {self.failed} failures" + (" (list truncated)" if self.truncated else ""))
        for f in self.failures:
            lines.append(f"  {f.graph6}  {f.check}: expected {f.expected}, got {f.got}")
        return "\n".join(lines)


def plain(value):
    """JSON-friendly copy: tuples become lists, enums their values, big ints decimal strings"""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return str(value) if abs(value) >= _SAFE_INT else value
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, (list, tuple)):
        return [plain(v) for v in value]
    if isinstance(value, dict):
        return {str(k): plain(v) for k, v in value.items()}
    return value if isinstance(value, (str, float)) else repr(value)


def resolve_checks(names: Iterable[str]) -> list[str]:
    """
    Validate check names, keeping registry order.

    Raises:
        ArgumentError: an unknown check name
    """
    wanted = set(names)
    unknown = sorted(wanted - CHECKS.keys())
    if unknown:
        raise ArgumentError(f"unknown check(s): {', '.join(unknown)}; known: {', '.join(CHECKS)}")
    if not wanted:
        raise ArgumentError("no check selected")
    return [name for name in CHECKS if name in wanted]


def check_graph(g: Graph, names: list[str], allow_large: bool = False) -> list[tuple[str, str, object, object]]:
    """
    Run checks on one graph.

    Returns:
        list[tuple[str, str, object, object]]: (check, status, expected, got)
            with status one of "passed", "failed", "skipped"; a check whose
            oracle is above its size guard counts as skipped
    """
    facts = GraphFacts(g, allow_large)
    outcomes = []
    for name in names:
        try:
            verdict = CHECKS[name](facts)
        except ScaleGuardError as e:
            logger.debug(f"{describe(g)} skipped {name}: {e.message}")
            outcomes.append((name, "skipped", None, None))
            continue
        except PernullError as e:
            outcomes.append((name, "failed", "no error", e.message))
            continue
        if verdict is None:
            outcomes.append((name, "skipped", None, None))
            continue
        expected, got = verdict
        status = "passed" if expected == got else "failed"
        outcomes.append((name, status, plain(expected), plain(got)))
    return outcomes


def _check_chunk(graphs: list[Graph], names: list[str], allow_large: bool) -> list[tuple[str, list]]:
    return [(describe(g), check_graph(g, names, allow_large)) for g in graphs]


def _windowed(
    pool: Executor, graphs: Iterable[Graph], names: list[str], allow_large: bool, window: int
) -> Iterator[tuple[str, list]]:
    """Results in corpus order with at most `window` chunks submitted and not yet consumed"""
    graphs = iter(graphs)
    pending = deque()
    while True:
        while len(pending) < window:
            chunk = list(islice(graphs, CHUNK_SIZE))
            if not chunk:
                break
            pending.append(pool.submit(_check_chunk, chunk, names, allow_large))
        if not pending:
            return
        yield from pending.popleft().result()


def run_verification(
    spec: CorpusSpec,
    checks: Iterable[str],
    workers: int = 1,
    allow_large: bool = False,
    progress: bool = False,
) -> VerifyResult:
    """
    Stream the corpus through the named checks.

    Args:
        spec (CorpusSpec): corpus to generate
        checks (Iterable[str]): check names from the registry
        workers (int): worker processes; results are consumed in corpus order
        allow_large (bool): accept inputs above the size guards
        progress (bool): show a progress bar on stderr

    Returns:
        VerifyResult: counts and at most MAX_REPORTED_FAILURES failures
    """
    names = resolve_checks(checks)
    spec.validate(allow_large)
    logger.info(f"Verifying {', '.join(names)} on {spec.kind.value} n={spec.n_min}..{spec.n_max}")
    result = VerifyResult(corpus=spec.to_dict(), checks={n: {"passed": 0, "failed": 0, "skipped": 0} for n in names})
    graphs = generate(spec, allow_large)
    failures: list[Failure] = []

    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outcomes = _windowed(pool, graphs, names, allow_large, workers * CHUNKS_PER_WORKER)
            _collect(result, failures, tqdm(outcomes, disable=not progress, unit="graph"))
    else:
        outcomes = ((describe(g), check_graph(g, names, allow_large)) for g in graphs)
        _collect(result, failures, tqdm(outcomes, disable=not progress, unit="graph"))

    failures.sort(key=lambda f: (f.graph6, f.check))
    result.truncated = len(failures) > MAX_REPORTED_FAILURES
    result.failures = failures[:MAX_REPORTED_FAILURES]
    logger.info(f"Checked {result.graphs} graphs: {result.failed} failures")
    return result


def _collect(result: VerifyResult, failures: list[Failure], outcomes: Iterable[tuple[str, list]]) -> None:
    for graph6, per_check in outcomes:
        result.graphs += 1
        for name, status, expected, got in per_check:
            result.checks[name][status] += 1
            if status == "failed":
                failures.append(Failure(graph6, name, expected, got))
                logger.debug(f"{graph6} failed {name}: expected {expected}, got {got}")
