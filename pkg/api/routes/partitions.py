"""Partition endpoints."""

from fastapi import APIRouter, Path

from api.models.invariants import PartitionListResponse
from services.partitions import enumerate_partitions, partition_count

router = APIRouter(prefix="/api/v1/partitions", tags=["partitions"])

# p(40) = 37338 partitions in one response
MAX_N = 40


@router.get("/{n}", response_model=PartitionListResponse)
def list_partitions(n: int = Path(..., ge=1, le=MAX_N)):
    """Get all partitions of n in reverse-lexicographic order."""
    return PartitionListResponse.from_domain(n, partition_count(n), enumerate_partitions(n))
