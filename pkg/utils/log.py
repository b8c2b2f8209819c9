"""Contain monitoring information: logs, errors, etc"""

import logging
import sys
from datetime import datetime
from pathlib import Path

def config_logger(
    log_dir: Path = None, level: int = logging.INFO
) -> logging.Logger:
    """Logging function. It has two main handlers:

        - a StreamHandler that logs in stderr (stdout is reserved for reports)
        - an optional FileHandler that logs in a .log file

    Args:
        log_dir (Path): output directory where to store log.
            If not passed, logs will only be printed in stderr
        level (int): logging level (default logging.INFO)

    Returns:
        logger: main logger
    """
    # Set to Warning all loggers imported from libraries
    for name in logging.root.manager.loggerDict:
        logging.getLogger(name).setLevel(logging.WARNING)

    logger = logging.getLogger()
    # clear any StreamHandler
    for handler in logger.handlers[:]:
        if isinstance(handler, logging.StreamHandler):
            logger.removeHandler(handler)

    logger.setLevel(level)
    formatter = logging.Formatter(
        "%(asctime)s %(levelname)s - [%(module)s] %(message)s"
    )

    stream_handler = logging.StreamHandler(sys.stderr)
    stream_handler.setFormatter(formatter)
    stream_handler.setLevel(level)
    logger.addHandler(stream_handler)

    # adding handler to .log file
    if log_dir is not None:
        # add timestamp to log path
        timestamp = datetime.today().strftime("%Y%m%d_%H%M%S")
        log_path = log_dir / f"logs_{timestamp}.log"

        file_handler = logging.FileHandler(log_path)
        file_handler.setFormatter(formatter)
        file_handler.setLevel(level)
        logger.addHandler(file_handler)

    return logger


class PernullError(Exception):
    """Base class of every error raised on purpose. Carries the CLI exit code."""
    exit_code = 1

    def __init__(self, message="Per-nullity computation failed."):
        self.message = message
        super().__init__(self.message)


class GraphFormatError(PernullError):
    """Exception raised when a graph6 line or an edge list cannot be parsed.

    Exactly one of `offset` (graph6 byte offset) or `line` (edge-list line
    number, 1-based) is usually set.
    """
    exit_code = 2

    def __init__(self, message="Malformed graph input.", offset: int | None = None, line: int | None = None):
        self.offset = offset
        self.line = line
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        if line is not None:
            message = f"{message} (line {line})"
        super().__init__(message)


class ArgumentError(PernullError, ValueError):
    """Exception raised when an operation receives an invalid argument."""
    exit_code = 2

    def __init__(self, message="Invalid argument."):
        super().__init__(message)


class PreconditionError(ArgumentError):
    """Exception raised when an operation is applied outside its hypothesis."""

    def __init__(self, message="Precondition of the operation does not hold."):
        super().__init__(message)


class ScaleGuardError(PernullError):
    """Exception raised when an input exceeds a size guard."""
    exit_code = 3

    def __init__(self, what: str = "input", size: int | None = None, limit: int | None = None):
        message = f"{what} of size {size} exceeds the guard {limit}; pass --unsafe-override-guards to run anyway"
        self.size = size
        self.limit = limit
        super().__init__(message)


class InvariantViolationError(PernullError):
    """Exception raised when an internal invariant is broken."""
    exit_code = 4

    def __init__(self, message="Internal invariant violated."):
        super().__init__(message)


class TheoremViolationError(InvariantViolationError):
    """Exception raised when a checked graph-theoretic statement fails on a concrete graph."""

    def __init__(self, message="Checked statement does not hold."):
        super().__init__(message)


class WellDefinednessError(InvariantViolationError):
    """Exception raised when M(G) differs between qualifying maximum matchings."""

    def __init__(self, message="M(G) depends on the choice of maximum matching."):
        super().__init__(message)
