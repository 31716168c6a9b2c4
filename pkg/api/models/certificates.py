"""Models for non-isomorphism certificates and classification reports."""

from typing import Any, Dict, List

from pydantic import BaseModel

from services.distinguisher import (
    ClassificationReport,
    HilbertSchemeSummary,
    NonIsoCertificate,
    PairCertificate,
)


class CertificateModel(BaseModel):
    """A single certificate."""
    kind: str
    route: str
    payload: Dict[str, Any]

    @classmethod
    def from_domain(cls, cert: NonIsoCertificate) -> "CertificateModel":
        return cls(kind=cert.kind.value, route=cert.route.value, payload=dict(cert.payload))


class DistinguishResponse(BaseModel):
    """Certificate for one pair."""
    a: List[int]
    b: List[int]
    genus: int
    certificate: CertificateModel


class PairCertificateModel(CertificateModel):
    index_a: int
    index_b: int
    a: List[int]
    b: List[int]

    @classmethod
    def from_pair(cls, pair: PairCertificate) -> "PairCertificateModel":
        cert = pair.certificate
        return cls(
            index_a=pair.index_a,
            index_b=pair.index_b,
            a=list(pair.a.parts),
            b=list(pair.b.parts),
            kind=cert.kind.value,
            route=cert.route.value,
            payload=dict(cert.payload),
        )


class HilbertSchemeSummaryModel(BaseModel):
    parts: List[int]
    dimension: int
    first_betti: int
    euler_characteristic: int
    picard_rank_genus0: int
    has_diagonal_property: bool

    @classmethod
    def from_domain(cls, summary: HilbertSchemeSummary) -> "HilbertSchemeSummaryModel":
        return cls(
            parts=list(summary.partition.parts),
            dimension=summary.dimension,
            first_betti=summary.first_betti,
            euler_characteristic=summary.euler_characteristic,
            picard_rank_genus0=summary.picard_rank_genus0,
            has_diagonal_property=summary.has_diagonal_property,
        )


class ClassificationReportModel(BaseModel):
    """Pairwise classification of the Hilbert schemes of good partitions of n."""
    n: int
    genus: int
    count: int
    upper_bound: int
    attains_bound: bool
    partitions: List[List[int]]
    routing: Dict[str, int]
    summaries: List[HilbertSchemeSummaryModel]
    certificates: List[PairCertificateModel]
    digest: str

    @classmethod
    def from_domain(cls, report: ClassificationReport) -> "ClassificationReportModel":
        return cls(
            n=report.n,
            genus=report.genus,
            count=report.count,
            upper_bound=report.upper_bound,
            attains_bound=report.attains_bound,
            partitions=[list(p.parts) for p in report.partitions],
            routing=report.routing,
            summaries=[HilbertSchemeSummaryModel.from_domain(s) for s in report.summaries],
            certificates=[PairCertificateModel.from_pair(pair) for pair in report.certificates],
            digest=report.digest,
        )
