"""
Slopes and Quot-scheme degrees of (r, n)-divisors.

Effective divisors D enter every formula only through deg(D), so the
inductive systems are indexed here by non-negative degrees.
"""

from dataclasses import dataclass
from fractions import Fraction

from utils.exceptions import InvalidInputError


def _check_int(value, name: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InvalidInputError(f"{name} must be an integer, got {value!r}")
    return value


def _check_rank(r) -> int:
    _check_int(r, "rank")
    if r < 1:
        raise InvalidInputError(f"rank must be at least 1, got {r}")
    return r


def _check_divisor_degree(d, name: str = "deg(D)") -> int:
    _check_int(d, name)
    if d < 0:
        raise InvalidInputError(f"{name} must be non-negative for an effective divisor, got {d}")
    return d


@dataclass(frozen=True)
class DivisorClassIndex:
    """Rank and degree of an (r, n)-divisor."""

    rank: int
    degree: int

    def __post_init__(self):
        _check_rank(self.rank)
        _check_int(self.degree, "degree")


@dataclass(frozen=True)
class Slope:
    """Reduced fraction n / r with positive denominator."""

    numerator: int
    denominator: int

    @classmethod
    def of(cls, n: int, r: int) -> "Slope":
        value = Fraction(n, r)
        return cls(value.numerator, value.denominator)

    @property
    def is_integral(self) -> bool:
        return self.denominator == 1

    def __str__(self) -> str:
        return f"{self.numerator}/{self.denominator}"


@dataclass(frozen=True)
class QuotIndex:
    """Quot^d of torsion quotients of the rank r trivial sheaf."""

    rank: int
    degree: int

    def __post_init__(self):
        _check_rank(self.rank)
        _check_int(self.degree, "torsion degree")


@dataclass(frozen=True)
class StructureMapDegrees:
    """Degrees along O_C(-D): Q^{r,n}(D_1) -> Q^{r,n}(D_2), D = D_2 - D_1."""

    kernel_before: int
    kernel_after: int
    quotient_before: int
    quotient_after: int


def slope(idx: DivisorClassIndex) -> Slope:
    return Slope.of(idx.degree, idx.rank)


def quot_degree(r: int, n: int, deg_d: int) -> int:
    """Torsion degree n + r * deg(D) of Q^{r,n}(D)."""
    _check_rank(r)
    _check_int(n, "n")
    _check_divisor_degree(deg_d)
    return n + r * deg_d


def structure_map_degrees(r: int, n: int, deg_d1: int, deg_d2: int) -> StructureMapDegrees:
    """
    Kernel and quotient degrees on both sides of the structure map.

    Args:
        r: Rank
        n: Degree index of the inductive system
        deg_d1: deg(D_1)
        deg_d2: deg(D_2), at least deg(D_1)

    Returns:
        StructureMapDegrees; kernel_after + quotient_after = 0
    """
    _check_divisor_degree(deg_d1, "deg(D_1)")
    _check_divisor_degree(deg_d2, "deg(D_2)")
    if deg_d2 < deg_d1:
        raise InvalidInputError(f"structure map needs D_2 >= D_1, got degrees {deg_d1} and {deg_d2}")
    quotient_before = quot_degree(r, n, deg_d1)
    quotient_after = quot_degree(r, n, deg_d2)
    return StructureMapDegrees(
        kernel_before=-quotient_before,
        kernel_after=-quotient_after,
        quotient_before=quotient_before,
        quotient_after=quotient_after,
    )


def quasi_iso_degree(r: int, n: int, d: int) -> int:
    """Torsion degree r*d - n on both sides of Div^{r,n}(D) -> Q^{r,-n}(D)."""
    _check_rank(r)
    _check_int(n, "n")
    _check_divisor_degree(d, "d")
    return r * d - n
