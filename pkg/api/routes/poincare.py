"""Betti number and Poincare polynomial endpoints."""

from typing import List, Optional

from fastapi import APIRouter, Path, Query

from api.models.invariants import BettiResponse, BettiRow, PoincareResponse
from services.partitions import Partition
from services.poincare import (
    macdonald_betti,
    multi_sym_poincare,
    multiproj_poincare,
    sym_poincare,
)

router = APIRouter(prefix="/api/v1", tags=["poincare"])

MAX_N = 1000
MAX_GENUS = 1000


@router.get("/betti/{n}", response_model=BettiResponse)
async def get_betti(
    n: int = Path(..., ge=1, le=MAX_N),
    genus: int = Query(..., ge=0, le=MAX_GENUS),
    r: Optional[int] = Query(None, description="Single degree; all degrees when omitted")
):
    """Get Macdonald Betti numbers of Sym^n(C)."""
    poly = sym_poincare(n, genus)
    degrees = [r] if r is not None else range(poly.degree + 1)
    return BettiResponse(
        n=n,
        genus=genus,
        betti=[BettiRow(r=k, betti=macdonald_betti(n, genus, k)) for k in degrees],
    )


@router.get("/poincare/sym/{n}", response_model=PoincareResponse)
async def get_sym_poincare(
    n: int = Path(..., ge=1, le=MAX_N),
    genus: int = Query(..., ge=0, le=MAX_GENUS)
):
    """Get the Poincare polynomial of Sym^n(C)."""
    return PoincareResponse.from_domain("sym", [n], sym_poincare(n, genus), genus)


@router.get("/poincare/multisym", response_model=PoincareResponse)
async def get_multi_sym_poincare(
    parts: List[int] = Query(..., description="Partition parts, any order"),
    genus: int = Query(..., ge=0)
):
    """Get the Poincare polynomial of Sym^{n_1}(C) x ... x Sym^{n_r}(C)."""
    partition = Partition.canonical(parts)
    poly = multi_sym_poincare(partition, genus)
    return PoincareResponse.from_domain("multisym", list(partition.parts), poly, genus)


@router.get("/poincare/multiproj", response_model=PoincareResponse)
async def get_multiproj_poincare(dims: List[int] = Query(...)):
    """Get the Poincare polynomial of a product of projective spaces."""
    dims = sorted(dims, reverse=True)
    return PoincareResponse.from_domain("multiproj", dims, multiproj_poincare(dims))
