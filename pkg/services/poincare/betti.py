"""Macdonald Betti numbers and Poincare polynomials of products of symmetric powers."""

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from services.partitions import Partition
from services.poincare.polynomial import (
    ONE,
    PoincarePolynomial,
    _is_int,
    binomial,
    poly_mul,
    poly_pow,
)
from utils.exceptions import InvalidInputError, OutOfRegimeError

# entries per memoized table; inputs reach these from the HTTP API
CACHE_SIZE = 4096


@dataclass(frozen=True)
class CurveClass:
    """A smooth projective curve, remembered only through its genus."""

    genus: int

    def __post_init__(self):
        _check_genus(self.genus)


def _check_genus(g: int) -> int:
    if not _is_int(g) or g < 0:
        raise InvalidInputError(f"genus must be a non-negative integer, got {g!r}")
    return g


def _check_degree(n: int, name: str = "n") -> int:
    if not _is_int(n) or n <= 0:
        raise InvalidInputError(f"{name} must be a positive integer, got {n!r}")
    return n


# kernels below expect validated ints; True and 1 share a cache slot
@lru_cache(maxsize=CACHE_SIZE)
def _betti(n: int, g: int, r: int) -> int:
    if r < 0 or r > 2 * n:
        return 0
    if r > n:
        r = 2 * n - r
    return sum(binomial(2 * g, r - 2 * j) for j in range(r // 2 + 1))


@lru_cache(maxsize=CACHE_SIZE)
def _sym(n: int, g: int) -> PoincarePolynomial:
    return PoincarePolynomial(tuple(_betti(n, g, r) for r in range(2 * n + 1)))


@lru_cache(maxsize=CACHE_SIZE)
def _multi_sym(parts: tuple, g: int) -> PoincarePolynomial:
    result = ONE
    for part in parts:
        result = poly_mul(result, _sym(part, g))
    return result


@lru_cache(maxsize=CACHE_SIZE)
def _projective(m: int) -> PoincarePolynomial:
    coeffs = [0] * (2 * m + 1)
    coeffs[::2] = [1] * (m + 1)
    return PoincarePolynomial(tuple(coeffs))


def macdonald_betti(n: int, g: int, r: int) -> int:
    """
    r-th Betti number of Sym^n(C) for a genus g curve.

    B_r = B_{2n-r} = C(2g, r) + C(2g, r-2) + ... for 0 <= r <= n,
    and 0 outside [0, 2n].
    """
    _check_degree(n)
    _check_genus(g)
    if not _is_int(r):
        raise InvalidInputError(f"degree index must be an integer, got {r!r}")
    return _betti(n, g, r)


def sym_poincare(n: int, g: int) -> PoincarePolynomial:
    """Poincare polynomial of Sym^n(C): degree 2n, palindromic."""
    _check_degree(n)
    _check_genus(g)
    return _sym(n, g)


def multi_sym_poincare(p: Partition, g: int) -> PoincarePolynomial:
    """
    Poincare polynomial of Sym^{n_1}(C) x ... x Sym^{n_r}(C) (Kunneth product).

    Args:
        p: Partition (n_1, ..., n_r)
        g: Genus of the curve

    Returns:
        Product of the factors' polynomials, of degree 2n
    """
    _check_genus(g)
    return _multi_sym(p.parts, g)


def projective_poincare(m: int) -> PoincarePolynomial:
    """Poincare polynomial 1 + x^2 + ... + x^{2m} of P^m."""
    if not _is_int(m) or m < 0:
        raise InvalidInputError(f"projective dimension must be a non-negative integer, got {m!r}")
    return _projective(m)


def multiproj_poincare(dims: Sequence[int]) -> PoincarePolynomial:
    """Poincare polynomial of P^{m_1} x ... x P^{m_s}."""
    dims = list(dims)
    if not dims:
        raise InvalidInputError("multiprojective space needs at least one factor")
    result = ONE
    for m in dims:
        result = poly_mul(result, projective_poincare(m))
    return result


def projective_bundle_poincare(d: int, g: int) -> PoincarePolynomial:
    """
    Poincare polynomial of Sym^d(C) seen as a P^{d-g} bundle over the Jacobian.

    Valid for d >= 2g - 1, where the Abel-Jacobi map is a projective bundle:
    (1 + x)^{2g} * (1 + x^2 + ... + x^{2(d-g)}).
    """
    _check_degree(d, "d")
    _check_genus(g)
    if d < 2 * g - 1:
        raise OutOfRegimeError(f"Sym^{d} is not a projective bundle over J(C) for genus {g}")
    jacobian = poly_pow(PoincarePolynomial((1, 1)), 2 * g)
    return poly_mul(jacobian, projective_poincare(d - g))


def composition_coefficient(p: Partition, g: int, k: int) -> int:
    """
    Coefficient of x^k in the multi symmetric product's Poincare polynomial.

    Sums, over compositions t_1 + ... + t_r = k, the products of the factors'
    Betti numbers B_{t_i}(Sym^{n_i}). Degrees outside [0, 2n] give 0.
    """
    _check_genus(g)
    if not _is_int(k) or k < 0 or k > 2 * p.n:
        return 0
    parts = p.parts

    @lru_cache(maxsize=None)
    def _tail(index: int, remaining: int) -> int:
        if index == len(parts):
            return 1 if remaining == 0 else 0
        total = 0
        for t in range(min(remaining, 2 * parts[index]) + 1):
            betti = macdonald_betti(parts[index], g, t)
            if betti:
                total += betti * _tail(index + 1, remaining - t)
        return total

    return _tail(0, k)


def euler_characteristic(poly: PoincarePolynomial) -> int:
    """Alternating sum of Betti numbers, P(-1)."""
    return poly.evaluate(-1)
