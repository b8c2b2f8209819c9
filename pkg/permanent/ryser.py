"""Exact permanent by Ryser's inclusion-exclusion formula"""
import logging

import numpy as np

from utils.log import ArgumentError
from utils.process import check_guard

logger = logging.getLogger()

RYSER_MAX_SIDE = 24


def as_square_matrix(matrix) -> np.ndarray:
    """
    Coerce to a square 2-D array of Python ints (object dtype keeps big integers exact).

    Raises:
        ArgumentError: not square
    """
    a = np.asarray(matrix, dtype=object)
    if a.shape in ((0,), (0, 0)):
        return np.empty((0, 0), dtype=object)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ArgumentError(f"permanent needs a square matrix, found shape {a.shape}")
    return a


def permanent(matrix, allow_large: bool = False) -> int:
    """
    per(A) = (-1)^n * sum over column subsets S of (-1)^|S| * prod_i sum_{j in S} a_ij.

    Subsets are visited in Gray-code order so each step adds or removes one
    column from the running row sums.

    Args:
        matrix: square matrix of integers (nested lists or numpy array)
        allow_large (bool): accept sides above RYSER_MAX_SIDE

    Returns:
        int: the permanent; 1 for the 0x0 matrix
    """
    a = as_square_matrix(matrix)
    n = a.shape[0]
    if n == 0:
        return 1
    check_guard("matrix side", n, RYSER_MAX_SIDE, allow_large)
    columns = [[int(x) for x in col] for col in a.T.tolist()]

    row_sums = [0] * n
    total = 0
    gray = 0
    size = 0
    for k in range(1, 1 << n):
        nxt = k ^ (k >> 1)
        j = (nxt ^ gray).bit_length() - 1
        col = columns[j]
        if nxt & (1 << j):
            row_sums = [s + c for s, c in zip(row_sums, col)]
            size += 1
        else:
            row_sums = [s - c for s, c in zip(row_sums, col)]
            size -= 1
        gray = nxt
        prod = 1
        for s in row_sums:
            prod *= s
            if not prod:
                break
        if prod:
            total += -prod if size & 1 else prod
    return -total if n & 1 else total
