"""Dense polynomials with unbounded non-negative integer coefficients."""

import math
from dataclasses import dataclass
from typing import Iterable, Tuple

import sympy

from utils.exceptions import InvalidInputError


def _is_int(value) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


@dataclass(frozen=True)
class PoincarePolynomial:
    """
    Coefficient vector indexed by cohomological degree.

    coeffs[i] is the i-th Betti number. Trailing zeros are stripped, so the
    zero polynomial has an empty vector.
    """

    coeffs: Tuple[int, ...]

    def __post_init__(self):
        coeffs = list(self.coeffs)
        for c in coeffs:
            if not _is_int(c):
                raise InvalidInputError(f"coefficients must be integers, got {c!r}")
            if c < 0:
                raise InvalidInputError(f"coefficients must be non-negative, got {c}")
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @classmethod
    def of(cls, coeffs: Iterable[int]) -> "PoincarePolynomial":
        return cls(tuple(coeffs))

    @property
    def degree(self) -> int:
        """Highest degree with a nonzero coefficient; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def coefficient(self, k: int) -> int:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def is_palindromic(self) -> bool:
        return self.coeffs == self.coeffs[::-1]

    def evaluate(self, x: int) -> int:
        total = 0
        for c in reversed(self.coeffs):
            total = total * x + c
        return total

    def total_betti(self) -> int:
        return sum(self.coeffs)

    def first_difference(self, other: "PoincarePolynomial"):
        """Smallest degree where the two polynomials differ, or None."""
        for k in range(max(len(self.coeffs), len(other.coeffs))):
            if self.coefficient(k) != other.coefficient(k):
                return k
        return None

    def to_sympy(self, symbol: str = "x"):
        x = sympy.Symbol(symbol)
        return sympy.Add(*[sympy.Integer(c) * x**i for i, c in enumerate(self.coeffs)])

    def __mul__(self, other: "PoincarePolynomial") -> "PoincarePolynomial":
        return poly_mul(self, other)

    def __str__(self) -> str:
        return str(self.to_sympy()) if self.coeffs else "0"


ONE = PoincarePolynomial((1,))


def binomial(a: int, b: int) -> int:
    """
    Binomial coefficient C(a, b) with C(a, b) = 0 outside 0 <= b <= a.

    Args:
        a: Non-negative integer
        b: Any integer

    Returns:
        Exact binomial coefficient
    """
    if not _is_int(a) or a < 0:
        raise InvalidInputError(f"binomial needs a non-negative top argument, got {a!r}")
    if not _is_int(b):
        raise InvalidInputError(f"binomial needs an integer bottom argument, got {b!r}")
    if b < 0 or b > a:
        return 0
    return math.comb(a, b)


def poly_mul(p: PoincarePolynomial, q: PoincarePolynomial) -> PoincarePolynomial:
    """Exact convolution product; degrees add."""
    if not p.coeffs or not q.coeffs:
        return PoincarePolynomial(())
    out = [0] * (len(p.coeffs) + len(q.coeffs) - 1)
    for i, a in enumerate(p.coeffs):
        if a == 0:
            continue
        for j, b in enumerate(q.coeffs):
            out[i + j] += a * b
    return PoincarePolynomial(tuple(out))


def poly_pow(p: PoincarePolynomial, k: int) -> PoincarePolynomial:
    """p**k by repeated squaring."""
    if not _is_int(k) or k < 0:
        raise InvalidInputError(f"exponent must be a non-negative integer, got {k!r}")
    result = ONE
    base = p
    while k:
        if k & 1:
            result = poly_mul(result, base)
        k >>= 1
        if k:
            base = poly_mul(base, base)
    return result
