"""The permanental polynomial per(xI - A(G)) and its exact interpolation"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from core.graph import Graph
from permanent.ryser import permanent
from utils.log import InvariantViolationError
from utils.process import check_guard

logger = logging.getLogger()

INTERPOLATION_MAX_N = 14


@dataclass(frozen=True)
class PermPolynomial:
    """
    pi(G, x) = sum_k b_k x^(n-k). `coeffs[k]` holds b_k, k = 0..n.
    """
    coeffs: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.coeffs) - 1

    @property
    def nullity(self) -> int:
        """Multiplicity of 0 as a root: n - max{k : b_k != 0}"""
        top = max(k for k, b in enumerate(self.coeffs) if b)
        return self.n - top

    def __mul__(self, other: PermPolynomial) -> PermPolynomial:
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return PermPolynomial(tuple(out))

    def evaluate(self, x: int) -> int:
        value = 0
        for b in self.coeffs:
            value = value * x + b
        return value

    def sign_pattern_holds(self) -> bool:
        """b_0 = 1, b_1 = 0 and (-1)^k b_k >= 0 for every k"""
        if self.coeffs[0] != 1 or (self.n >= 1 and self.coeffs[1] != 0):
            return False
        return all((-b if k & 1 else b) >= 0 for k, b in enumerate(self.coeffs))

    def to_strings(self) -> list[str]:
        """Coefficients as decimal strings, safe for JSON consumers with 53-bit numbers"""
        return [str(b) for b in self.coeffs]

    def __str__(self) -> str:
        terms = []
        for k, b in enumerate(self.coeffs):
            if not b:
                continue
            power = self.n - k
            mag = abs(b)
            body = "" if mag == 1 and power else str(mag)
            if power:
                body += "x" if power == 1 else f"x^{power}"
            sign = "-" if b < 0 else "+"
            terms.append((sign, body))
        if not terms:
            return "0"
        first_sign, first = terms[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


def characteristic_matrix(g: Graph, x: int) -> np.ndarray:
    """xI - A(G) as an object-dtype array"""
    m = np.zeros((g.n, g.n), dtype=object)
    for u, v in g.edges():
        m[u, v] = m[v, u] = -1
    for v in range(g.n):
        m[v, v] = x
    return m


def _newton_to_monomial(nodes: list[int], values: list[int]) -> list[Fraction]:
    """
    Solve the Vandermonde system for the interpolating polynomial through
    (nodes[i], values[i]) via divided differences. Returns ascending-power
    coefficients.
    """
    k = len(nodes)
    table = [Fraction(v) for v in values]
    for level in range(1, k):
        for i in range(k - 1, level - 1, -1):
            table[i] = (table[i] - table[i - 1]) / (nodes[i] - nodes[i - level])
    # Horner on the Newton form, highest divided difference first
    poly = [Fraction(0)] * k
    poly[0] = table[k - 1]
    degree = 0
    for i in range(k - 2, -1, -1):
        # poly = poly * (x - nodes[i]) + table[i]
        shifted = [Fraction(0)] + poly[:degree + 1]
        for p in range(degree + 1):
            shifted[p] -= nodes[i] * poly[p]
        degree += 1
        shifted[0] += table[i]
        poly[:degree + 1] = shifted
    return poly


def perm_polynomial_interpolation(g: Graph, allow_large: bool = False) -> PermPolynomial:
    """
    pi(G, x) from per(xI - A) evaluated at x = 0..n with Ryser's formula,
    interpolated exactly over the rationals.

    Raises:
        ScaleGuardError: n > INTERPOLATION_MAX_N without override
        InvariantViolationError: a coefficient is not an integer, or b_0 != 1
    """
    check_guard("graph for interpolation", g.n, INTERPOLATION_MAX_N, allow_large)
    nodes = list(range(g.n + 1))
    values = [permanent(characteristic_matrix(g, x), allow_large=allow_large) for x in nodes]
    ascending = _newton_to_monomial(nodes, values)
    coeffs = []
    for c in reversed(ascending):
        if c.denominator != 1:
            raise InvariantViolationError(f"non-integral permanental coefficient {c}")
        coeffs.append(int(c))
    if coeffs[0] != 1:
        raise InvariantViolationError(f"leading permanental coefficient is {coeffs[0]}, expected 1")
    return PermPolynomial(tuple(coeffs))
