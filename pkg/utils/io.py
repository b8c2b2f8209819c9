"""Contains functions used for io operations - read graph sources, write reports"""

import json
import logging
from collections.abc import Iterable, Iterator
from pathlib import Path

import click

logger = logging.getLogger()


def read_text(path: Path | None = None, encoding: str = "ascii") -> str:
    """
    Read a whole input source.

    Args:
        path (Path | None): file to read; stdin when None or "-"
        encoding (str): graph6 and edge lists are plain ASCII

    Returns:
        str: file content
    """
    if path is None or str(path) == "-":
        logger.debug("Reading graphs from stdin")
        return click.get_text_stream("stdin", encoding=encoding, errors="surrogateescape").read()
    logger.info(f"Reading graphs from {path}")
    with open(path, "rt", encoding=encoding, errors="surrogateescape") as f:
        return f.read()


def numbered_lines(text: str) -> Iterator[tuple[int, str]]:
    """Yield (1-based line number, stripped line) for every non-blank line"""
    for number, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if line:
            yield number, line


def to_json(record: dict, pretty: bool = False) -> str:
    return json.dumps(record, indent=2 if pretty else None, sort_keys=not pretty)


def to_jsonl(records: Iterable[dict]) -> str:
    return "\n".join(json.dumps(r) for r in records)


def save_txt(txt: str, filepath: Path, encoding: str = "UTF8") -> None:
    """Save string as txt"""
    with open(filepath, "wt", encoding=encoding) as f:
        f.write(txt)
    logger.debug(f"Saved TXT {filepath}")


def emit(txt: str, filepath: Path | None = None) -> None:
    """Write a report to `filepath`, or to stdout when no path is given"""
    if filepath is None:
        click.echo(txt)
    else:
        save_txt(txt if txt.endswith("\n") else txt + "\n", filepath)
