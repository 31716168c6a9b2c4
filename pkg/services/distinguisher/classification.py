"""Counting Hilbert schemes attached to good partitions of a constant polynomial."""

from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, List, Optional, Tuple

from services.partitions import Partition, enumerate_partitions, partition_count
from services.distinguisher.certificates import (
    NonIsoCertificate,
    distinguish,
    verify_certificate,
)
from services.distinguisher.invariants import HilbertSchemeSummary, hilbert_scheme_summary
from utils.hashing import hash_payload
from utils.logging import get_logger
from utils.settings import get_settings

logger = get_logger(__name__)


@dataclass(frozen=True)
class PairCertificate:
    """Certificate for the unordered pair (partitions[index_a], partitions[index_b])."""

    index_a: int
    index_b: int
    a: Partition
    b: Partition
    certificate: NonIsoCertificate


@dataclass(frozen=True)
class ClassificationReport:
    """Outcome of comparing every pair of partitions of n on a genus g curve."""

    n: int
    genus: int
    count: int
    upper_bound: int
    partitions: List[Partition]
    certificates: List[PairCertificate]
    summaries: List[HilbertSchemeSummary]

    @property
    def routing(self) -> Dict[str, int]:
        tally = Counter(pair.certificate.kind.value for pair in self.certificates)
        return dict(sorted(tally.items()))

    @property
    def attains_bound(self) -> bool:
        return self.count == self.upper_bound

    def certificate_table(self) -> List[dict]:
        """Plain rows for the certificate table, in pair-index order."""
        return [
            {
                "index_a": pair.index_a,
                "index_b": pair.index_b,
                "a": list(pair.a.parts),
                "b": list(pair.b.parts),
                "kind": pair.certificate.kind.value,
                "route": pair.certificate.route.value,
                "payload": pair.certificate.payload,
            }
            for pair in self.certificates
        ]

    @property
    def digest(self) -> str:
        return hash_payload(self.certificate_table())


def _count_classes(size: int, certificates: List[PairCertificate]) -> int:
    # union-find over pairs that were not separated
    parent = list(range(size))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for pair in certificates:
        if not pair.certificate.is_witness:
            parent[find(pair.index_a)] = find(pair.index_b)
    return len({find(i) for i in range(size)})


def classify_hilbert_schemes(
    n: int,
    g: int,
    workers: Optional[int] = None,
    verify: bool = False
) -> ClassificationReport:
    """
    Compare the Hilbert schemes of all good partitions of n pairwise.

    Pairs are independent and may be evaluated on several threads; the
    report lists them in pair-index order regardless of completion order.

    Args:
        n: Positive integer (the constant Hilbert polynomial)
        g: Genus of the curve
        workers: Thread count; defaults to CLASSIFY_WORKERS
        verify: Recompute every certificate after it is issued

    Returns:
        ClassificationReport with one certificate per unordered pair

    Raises:
        IndistinguishableError: if some pair cannot be separated
    """
    partitions = enumerate_partitions(n)
    pairs: List[Tuple[int, int]] = list(combinations(range(len(partitions)), 2))
    workers = workers or get_settings().classify_workers

    def evaluate(pair: Tuple[int, int]) -> PairCertificate:
        i, j = pair
        a, b = partitions[i], partitions[j]
        cert = distinguish(a, b, g)
        if verify:
            verify_certificate(cert, a, b, g)
        return PairCertificate(i, j, a, b, cert)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            certificates = list(executor.map(evaluate, pairs))
    else:
        certificates = [evaluate(pair) for pair in pairs]

    report = ClassificationReport(
        n=n,
        genus=g,
        count=_count_classes(len(partitions), certificates),
        upper_bound=partition_count(n),
        partitions=partitions,
        certificates=certificates,
        summaries=[hilbert_scheme_summary(p, g) for p in partitions],
    )
    logger.info(
        f"Classified n={n}, genus={g}: {report.count} classes of {report.upper_bound}, "
        f"{len(certificates)} certificates {report.routing}"
    )
    return report
