"""Certificate and classification endpoints."""

from typing import List, Optional

from fastapi import APIRouter, Path, Query

from api.models.certificates import (
    CertificateModel,
    ClassificationReportModel,
    DistinguishResponse,
)
from services.distinguisher import classify_hilbert_schemes, distinguish
from services.partitions import Partition

router = APIRouter(prefix="/api/v1", tags=["distinguisher"])

# p(16) = 231 partitions, 26565 pairs
MAX_CLASSIFY_N = 16


@router.get("/distinguish", response_model=DistinguishResponse)
async def get_certificate(
    a: List[int] = Query(..., description="Parts of the first partition"),
    b: List[int] = Query(..., description="Parts of the second partition"),
    genus: int = Query(..., ge=0)
):
    """Get a non-isomorphism certificate for two multi symmetric products."""
    left = Partition.canonical(a)
    right = Partition.canonical(b)
    cert = distinguish(left, right, genus)
    return DistinguishResponse(
        a=list(left.parts),
        b=list(right.parts),
        genus=genus,
        certificate=CertificateModel.from_domain(cert),
    )


@router.get("/classify/{n}", response_model=ClassificationReportModel)
def get_classification(
    n: int = Path(..., ge=1, le=MAX_CLASSIFY_N),
    genus: int = Query(..., ge=0),
    workers: Optional[int] = Query(None, ge=1, le=32)
):
    """Classify the Hilbert schemes of all good partitions of n."""
    # sync handler: runs in the threadpool, classification is CPU bound
    return ClassificationReportModel.from_domain(
        classify_hilbert_schemes(n, genus, workers=workers)
    )
