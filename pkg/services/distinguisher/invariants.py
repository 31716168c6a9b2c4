"""Numerical invariants of multi symmetric products."""

from dataclasses import dataclass
from typing import List

from services.partitions import Partition
from services.poincare import (
    CurveClass,
    PoincarePolynomial,
    euler_characteristic,
    multi_sym_poincare,
)
from services.poincare.polynomial import _is_int
from utils.exceptions import InvalidInputError, OutOfRegimeError


@dataclass(frozen=True)
class MultiSymProduct:
    """Sym^{n_1}(C) x ... x Sym^{n_r}(C), of type [(n_1, ..., n_r), n]."""

    partition: Partition
    genus: int

    def __post_init__(self):
        CurveClass(self.genus)

    @property
    def curve(self) -> CurveClass:
        return CurveClass(self.genus)

    @property
    def n(self) -> int:
        return self.partition.n

    def poincare(self) -> PoincarePolynomial:
        return multi_sym_poincare(self.partition, self.genus)


def first_betti_multi(length: int, g: int) -> int:
    """First Betti number 2rg of a multi symmetric product with r factors."""
    if not _is_int(length) or length <= 0:
        raise InvalidInputError(f"length must be a positive integer, got {length!r}")
    if not _is_int(g) or g < 0:
        raise InvalidInputError(f"genus must be a non-negative integer, got {g!r}")
    return 2 * length * g


def riemann_roch_h0(d: int, g: int) -> int:
    """
    h^0(C, O_C(D)) for a divisor of degree d on a genus g curve.

    Only asserted for d >= 2g - 1, where h^1 vanishes by Serre duality and
    Riemann-Roch gives d - g + 1. The fibre of Sym^d(C) -> J(C) is then
    P^{d - g}.
    """
    if not _is_int(d) or not _is_int(g) or g < 0:
        raise InvalidInputError(f"need integer degree and non-negative genus, got d={d!r}, g={g!r}")
    if d < 2 * g - 1:
        raise OutOfRegimeError(f"h^1 may not vanish for degree {d} on genus {g}; need d >= {2 * g - 1}")
    return d - g + 1


def fiber_dimensions(p: Partition, g: int) -> List[int]:
    """Dimensions [n_i - g] of the Abel-Jacobi fibre of a multi symmetric product."""
    return [riemann_roch_h0(part, g) - 1 for part in p.parts]


@dataclass(frozen=True)
class HilbertSchemeSummary:
    """Invariants of Hilb^{n_1} x ... x Hilb^{n_s} of a curve, which is a multi symmetric product."""

    partition: Partition
    genus: int
    dimension: int
    first_betti: int
    euler_characteristic: int
    picard_rank_genus0: int
    # Sym^d(C) has the diagonal property and it is stable under products
    has_diagonal_property: bool = True


def hilbert_scheme_summary(p: Partition, g: int) -> HilbertSchemeSummary:
    product = MultiSymProduct(p, g)
    return HilbertSchemeSummary(
        partition=p,
        genus=g,
        dimension=p.n,
        first_betti=first_betti_multi(p.length, g),
        euler_characteristic=euler_characteristic(product.poincare()),
        picard_rank_genus0=p.length,
    )
