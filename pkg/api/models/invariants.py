"""Models for partitions, Poincare polynomials and Betti numbers."""

from typing import List, Optional

from pydantic import BaseModel

from services.partitions import Partition
from services.poincare import PoincarePolynomial, euler_characteristic


class PartitionListResponse(BaseModel):
    """All partitions of n."""
    n: int
    count: int
    partitions: List[List[int]]

    @classmethod
    def from_domain(cls, n: int, count: int, partitions: List[Partition]) -> "PartitionListResponse":
        return cls(n=n, count=count, partitions=[list(p.parts) for p in partitions])


class BettiRow(BaseModel):
    r: int
    betti: int


class BettiResponse(BaseModel):
    """Macdonald Betti numbers of Sym^n(C)."""
    n: int
    genus: int
    betti: List[BettiRow]


class PoincareResponse(BaseModel):
    """Coefficient vector of a Poincare polynomial."""
    space: str
    genus: Optional[int] = None
    parts: List[int]
    coeffs: List[int]
    degree: int
    euler_characteristic: int

    @classmethod
    def from_domain(
        cls,
        space: str,
        parts: List[int],
        poly: PoincarePolynomial,
        genus: Optional[int] = None
    ) -> "PoincareResponse":
        return cls(
            space=space,
            genus=genus,
            parts=list(parts),
            coeffs=list(poly.coeffs),
            degree=poly.degree,
            euler_characteristic=euler_characteristic(poly),
        )
