"""Higher rank divisor endpoints."""

from fastapi import APIRouter, Query

from api.models.divisors import (
    ConstituentModel,
    QuotDegreeResponse,
    SlopeResponse,
    ThresholdsResponse,
)
from services.ind_divisors import (
    DivisorClassIndex,
    constituent,
    ind_variety_properties,
    slope,
)

router = APIRouter(prefix="/api/v1/divisors", tags=["divisors"])


@router.get("/slope", response_model=SlopeResponse)
async def get_slope(rank: int = Query(..., ge=1), degree: int = Query(...)):
    """Get the slope n/r of an (r, n)-divisor."""
    return SlopeResponse.from_domain(rank, degree, slope(DivisorClassIndex(rank, degree)))


@router.get("/thresholds", response_model=ThresholdsResponse)
async def get_thresholds(rank: int = Query(..., ge=1), degree: int = Query(...)):
    """Get DP/WPP thresholds of the ind-variety of (rank, degree)-divisors."""
    return ThresholdsResponse.from_domain(ind_variety_properties(rank, degree))


@router.get("/quotdeg", response_model=QuotDegreeResponse)
async def get_quot_degree(
    rank: int = Query(..., ge=1),
    degree: int = Query(...),
    deg_d: int = Query(..., ge=0)
):
    """Get the constituent Q^{r,n}(D) for a divisor of degree deg_d."""
    return QuotDegreeResponse(
        rank=rank,
        degree=degree,
        deg_d=deg_d,
        constituent=ConstituentModel.from_domain(constituent(rank, degree, deg_d)),
    )
