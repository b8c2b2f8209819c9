"""Contains small helpers shared by every package: bitsets, guards, workers."""

import os
import logging
from collections.abc import Iterator

from utils.log import ArgumentError, ScaleGuardError

logger = logging.getLogger()

THREADS_ENV = "PERNULL_THREADS"


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the positions of the set bits of `mask` in ascending order"""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def mask_of(vertices) -> int:
    """Bitset with one bit per vertex label"""
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def check_guard(what: str, size: int, limit: int, allow_large: bool = False) -> None:
    """
    Raise ScaleGuardError when `size` exceeds `limit`, unless the caller accepts the cost.

    Args:
        what (str): name of the guarded quantity, used in messages
        size (int): measured size
        limit (int): configured guard
        allow_large (bool): explicit override
    """
    if size <= limit:
        return
    if allow_large:
        logger.warning(f"{what} of size {size} exceeds guard {limit}; running anyway")
        return
    raise ScaleGuardError(what, size, limit)


def worker_count(requested: int | None = None) -> int:
    """
    Resolve the parallelism cap.

    Args:
        requested (int | None): explicit value; falls back to $PERNULL_THREADS, then 1

    Returns:
        int: number of worker processes, at least 1
    """
    if requested is None:
        raw = os.environ.get(THREADS_ENV)
        if raw is None:
            return 1
        try:
            requested = int(raw)
        except ValueError:
            raise ArgumentError(f"{THREADS_ENV} must be an integer, found: {raw!r}")
    if requested < 1:
        raise ArgumentError(f"worker count must be positive, found: {requested}")
    return min(requested, os.cpu_count() or 1)
