"""Non-isomorphism certificates between multi symmetric products."""

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Sequence

from services.partitions import Partition, strip_common_parts
from services.poincare import multi_sym_poincare, multiproj_poincare
from services.poincare.polynomial import _is_int
from services.distinguisher.invariants import fiber_dimensions, first_betti_multi
from utils.exceptions import (
    CertificateError,
    IndistinguishableError,
    InvalidInputError,
)
from utils.logging import get_logger

logger = get_logger(__name__)


class CertificateKind(str, Enum):
    """Invariant a certificate is built on."""

    EQUAL_PARTITIONS = "EqualPartitions"
    FIRST_BETTI_DIFFERS = "FirstBettiDiffers"
    BETTI_DIFFERS = "BettiDiffers"
    FIBER_MULTIPROJ = "FiberMultiproj"
    PICARD_RANK_DIFFERS = "PicardRankDiffers"
    POLYNOMIAL_DIFFERS = "PolynomialDiffers"


class Route(str, Enum):
    """Case of `distinguish` that produced a certificate."""

    EQUAL = "equal"
    GENUS0_LENGTHS = "genus0_lengths"
    GENUS0_SAME_LENGTH = "genus0_same_length"
    LENGTHS = "lengths"
    SMALL_PARTS = "small_parts"
    BIG_PARTS = "big_parts"
    FALLBACK = "fallback"
    MULTIPROJ = "multiproj"


@dataclass(frozen=True)
class NonIsoCertificate:
    """
    Witness that two spaces are non-isomorphic, or that the inputs are equal.

    Payload keys per kind:
        FirstBettiDiffers: first_betti_a, first_betti_b
        BettiDiffers: degree, betti_a, betti_b
        FiberMultiproj: dims_a, dims_b
        PicardRankDiffers: rank_a, rank_b
        PolynomialDiffers: degree, coefficient_a, coefficient_b, polynomial
    """

    kind: CertificateKind
    payload: Dict[str, Any] = field(default_factory=dict)
    route: Route = Route.EQUAL

    @property
    def is_witness(self) -> bool:
        return self.kind is not CertificateKind.EQUAL_PARTITIONS


def _check_dims(dims: Sequence[int], name: str) -> list:
    dims = list(dims)
    if not dims:
        raise InvalidInputError(f"{name} must be non-empty")
    for m in dims:
        if not _is_int(m) or m < 0:
            raise InvalidInputError(f"{name} entries must be non-negative integers, got {m!r}")
    if any(dims[i] < dims[i + 1] for i in range(len(dims) - 1)):
        raise InvalidInputError(f"{name} must be sorted non-increasing, got {dims}")
    return dims


def multiproj_distinct(dims_a: Sequence[int], dims_b: Sequence[int]) -> NonIsoCertificate:
    """
    Separate P^{m_1} x ... x P^{m_s} from P^{n_1} x ... x P^{n_s}.

    Both lists must have the same length and sum. Distinct multisets are
    witnessed by the smallest degree where the Poincare polynomials differ.
    """
    dims_a = _check_dims(dims_a, "dims_a")
    dims_b = _check_dims(dims_b, "dims_b")
    if len(dims_a) != len(dims_b):
        raise InvalidInputError(f"lengths differ: {len(dims_a)} vs {len(dims_b)}")
    if sum(dims_a) != sum(dims_b):
        raise InvalidInputError(f"sums differ: {sum(dims_a)} vs {sum(dims_b)}")
    if dims_a == dims_b:
        return NonIsoCertificate(CertificateKind.EQUAL_PARTITIONS, {}, Route.EQUAL)

    poly_a = multiproj_poincare(dims_a)
    poly_b = multiproj_poincare(dims_b)
    k = poly_a.first_difference(poly_b)
    if k is None:
        raise IndistinguishableError(dims_a, dims_b, 0)
    return NonIsoCertificate(
        CertificateKind.POLYNOMIAL_DIFFERS,
        {
            "degree": k,
            "coefficient_a": poly_a.coefficient(k),
            "coefficient_b": poly_b.coefficient(k),
            "polynomial": "multiproj",
        },
        Route.MULTIPROJ,
    )


def _polynomial_fallback(a: Partition, b: Partition, g: int, reason: str) -> NonIsoCertificate:
    logger.warning(f"{a} vs {b} at genus {g}: {reason}; comparing full Poincare polynomials")
    poly_a = multi_sym_poincare(a, g)
    poly_b = multi_sym_poincare(b, g)
    k = poly_a.first_difference(poly_b)
    if k is None:
        raise IndistinguishableError(a, b, g)
    return NonIsoCertificate(
        CertificateKind.POLYNOMIAL_DIFFERS,
        {
            "degree": k,
            "coefficient_a": poly_a.coefficient(k),
            "coefficient_b": poly_b.coefficient(k),
            "polynomial": "multisym",
        },
        Route.FALLBACK,
    )


def distinguish(a: Partition, b: Partition, g: int) -> NonIsoCertificate:
    """
    Certify that the multi symmetric products of types a and b are not isomorphic.

    Routing:
        equal partitions -> EqualPartitions
        g = 0, lengths differ -> PicardRankDiffers
        g = 0, same length -> PolynomialDiffers on the multiprojective spaces
        g >= 1, lengths differ -> FirstBettiDiffers (2rg vs 2sg)
        g >= 1, same length, smallest part after stripping common parts
            <= 2g - 1 -> BettiDiffers at that part + 1
        otherwise -> FiberMultiproj on the Abel-Jacobi fibre dimensions

    When the primary invariant does not separate the pair, the full
    Poincare polynomials are compared; if they agree too,
    IndistinguishableError is raised.

    Args:
        a: First partition
        b: Second partition of the same integer
        g: Genus of the curve

    Returns:
        NonIsoCertificate
    """
    if not _is_int(g) or g < 0:
        raise InvalidInputError(f"genus must be a non-negative integer, got {g!r}")
    if a.n != b.n:
        raise InvalidInputError(f"{a} and {b} partition different integers ({a.n} vs {b.n})")

    if a.parts == b.parts:
        return NonIsoCertificate(CertificateKind.EQUAL_PARTITIONS, {}, Route.EQUAL)

    if g == 0:
        if a.length != b.length:
            return NonIsoCertificate(
                CertificateKind.PICARD_RANK_DIFFERS,
                {"rank_a": a.length, "rank_b": b.length},
                Route.GENUS0_LENGTHS,
            )
        # Sym^m(P^1) = P^m
        cert = multiproj_distinct(a.parts, b.parts)
        return NonIsoCertificate(cert.kind, cert.payload, Route.GENUS0_SAME_LENGTH)

    if a.length != b.length:
        return NonIsoCertificate(
            CertificateKind.FIRST_BETTI_DIFFERS,
            {
                "first_betti_a": first_betti_multi(a.length, g),
                "first_betti_b": first_betti_multi(b.length, g),
            },
            Route.LENGTHS,
        )

    rest_a, rest_b = strip_common_parts(a, b)
    smallest = min(rest_a + rest_b)
    if smallest <= 2 * g - 1:
        k = smallest + 1
        betti_a = multi_sym_poincare(a, g).coefficient(k)
        betti_b = multi_sym_poincare(b, g).coefficient(k)
        logger.debug(f"{a} vs {b} at genus {g}: small-part route, degree {k}")
        if betti_a != betti_b:
            return NonIsoCertificate(
                CertificateKind.BETTI_DIFFERS,
                {"degree": k, "betti_a": betti_a, "betti_b": betti_b},
                Route.SMALL_PARTS,
            )
        return _polynomial_fallback(a, b, g, f"B_{k} agrees")

    # fibre comparison needs every factor in the projective-bundle regime
    if min(a.parts + b.parts) < 2 * g - 1:
        return _polynomial_fallback(a, b, g, "a common part lies below 2g - 1")

    dims_a = fiber_dimensions(a, g)
    dims_b = fiber_dimensions(b, g)
    logger.debug(f"{a} vs {b} at genus {g}: fibre route, dims {dims_a} vs {dims_b}")
    if Counter(dims_a) != Counter(dims_b):
        return NonIsoCertificate(
            CertificateKind.FIBER_MULTIPROJ,
            {"dims_a": dims_a, "dims_b": dims_b},
            Route.BIG_PARTS,
        )
    return _polynomial_fallback(a, b, g, "fibre dimensions agree")


def _expect(condition: bool, message: str):
    if not condition:
        raise CertificateError(message)


def verify_certificate(cert: NonIsoCertificate, a: Partition, b: Partition, g: int) -> None:
    """
    Recompute the invariant a certificate names and check its payload.

    Raises:
        CertificateError: if the payload is not reproduced or the values agree
    """
    payload = cert.payload
    kind = cert.kind

    if kind is CertificateKind.EQUAL_PARTITIONS:
        _expect(a.parts == b.parts, f"EqualPartitions issued for {a} and {b}")
        return

    _expect(a.parts != b.parts, f"{kind.value} issued for equal partitions {a}")

    if kind is CertificateKind.FIRST_BETTI_DIFFERS:
        for label, p in (("a", a), ("b", b)):
            value = multi_sym_poincare(p, g).coefficient(1)
            _expect(value == first_betti_multi(p.length, g), f"B_1 of {p} is {value}, not 2rg")
            _expect(payload[f"first_betti_{label}"] == value, f"first_betti_{label} mismatch for {p}")
        _expect(payload["first_betti_a"] != payload["first_betti_b"], "first Betti numbers agree")

    elif kind is CertificateKind.BETTI_DIFFERS:
        k = payload["degree"]
        for label, p in (("a", a), ("b", b)):
            value = multi_sym_poincare(p, g).coefficient(k)
            _expect(payload[f"betti_{label}"] == value, f"B_{k} of {p} is {value}, payload says {payload[f'betti_{label}']}")
        _expect(payload["betti_a"] != payload["betti_b"], f"B_{k} agrees")

    elif kind is CertificateKind.FIBER_MULTIPROJ:
        _expect(list(payload["dims_a"]) == fiber_dimensions(a, g), f"fibre dims of {a} mismatch")
        _expect(list(payload["dims_b"]) == fiber_dimensions(b, g), f"fibre dims of {b} mismatch")
        _expect(Counter(payload["dims_a"]) != Counter(payload["dims_b"]), "fibre dimension multisets agree")

    elif kind is CertificateKind.PICARD_RANK_DIFFERS:
        _expect(g == 0, "Picard rank certificates are issued for genus 0 only")
        _expect(payload["rank_a"] == a.length and payload["rank_b"] == b.length, "Picard rank mismatch")
        _expect(payload["rank_a"] != payload["rank_b"], "Picard ranks agree")

    elif kind is CertificateKind.POLYNOMIAL_DIFFERS:
        if payload["polynomial"] == "multiproj":
            poly_a, poly_b = multiproj_poincare(a.parts), multiproj_poincare(b.parts)
        else:
            poly_a, poly_b = multi_sym_poincare(a, g), multi_sym_poincare(b, g)
        k = payload["degree"]
        _expect(poly_a.first_difference(poly_b) == k, f"degree {k} is not the first difference")
        _expect(payload["coefficient_a"] == poly_a.coefficient(k), f"coefficient_a mismatch at x^{k}")
        _expect(payload["coefficient_b"] == poly_b.coefficient(k), f"coefficient_b mismatch at x^{k}")
        _expect(payload["coefficient_a"] != payload["coefficient_b"], f"coefficients agree at x^{k}")

    else:
        raise CertificateError(f"unknown certificate kind {kind!r}")
