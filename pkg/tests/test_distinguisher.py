"""Tests for non-isomorphism certificates and the p(n) classification."""

from collections import Counter

import pytest

from services.distinguisher import (
    CertificateKind,
    MultiSymProduct,
    NonIsoCertificate,
    Route,
    classify_hilbert_schemes,
    distinguish,
    fiber_dimensions,
    first_betti_multi,
    hilbert_scheme_summary,
    multiproj_distinct,
    riemann_roch_h0,
    verify_certificate,
)
from services.partitions import Partition, enumerate_partitions, partition_count, strip_common_parts
from services.poincare import CurveClass, multi_sym_poincare
from utils.exceptions import (
    CertificateError,
    InvalidInputError,
    OutOfRegimeError,
)


def P(*parts):
    return Partition(parts)


def test_first_betti_multi():
    for genus in range(5):
        assert first_betti_multi(1, genus) == 2 * genus
        assert first_betti_multi(2, genus) == 4 * genus
    assert first_betti_multi(7, 0) == 0
    with pytest.raises(InvalidInputError):
        first_betti_multi(0, 1)


def test_riemann_roch_h0():
    assert riemann_roch_h0(3, 1) == 3
    for genus in range(1, 6):
        assert riemann_roch_h0(2 * genus - 1, genus) == genus
    assert riemann_roch_h0(5, 2) == 4
    assert fiber_dimensions(P(5), 2) == [3]
    with pytest.raises(OutOfRegimeError):
        riemann_roch_h0(2, 2)


def test_multi_sym_product():
    product = MultiSymProduct(P(4, 1), 1)
    assert product.n == 5
    assert product.poincare().coefficient(2) == 7
    with pytest.raises(InvalidInputError):
        MultiSymProduct(P(2), -1)
    with pytest.raises(InvalidInputError):
        MultiSymProduct(P(2), True)
    assert product.curve == CurveClass(1)
    assert MultiSymProduct(P(3, 3), 2).curve.genus == 2


def test_distinguish_small_parts():
    cert = distinguish(P(4, 1), P(3, 2), 1)
    assert cert.kind is CertificateKind.BETTI_DIFFERS
    assert cert.route is Route.SMALL_PARTS
    assert cert.payload == {"degree": 2, "betti_a": 7, "betti_b": 8}


def test_distinguish_lengths():
    cert = distinguish(P(2, 1), P(1, 1, 1), 2)
    assert cert.kind is CertificateKind.FIRST_BETTI_DIFFERS
    assert cert.payload == {"first_betti_a": 8, "first_betti_b": 12}


def test_distinguish_big_parts():
    cert = distinguish(P(3, 3), P(4, 2), 1)
    assert cert.kind is CertificateKind.FIBER_MULTIPROJ
    assert cert.route is Route.BIG_PARTS
    assert cert.payload == {"dims_a": [2, 2], "dims_b": [3, 1]}


def test_distinguish_equal():
    cert = distinguish(P(3, 2), P(3, 2), 4)
    assert cert.kind is CertificateKind.EQUAL_PARTITIONS
    assert not cert.is_witness


def test_distinguish_genus_zero():
    cert = distinguish(P(3, 1), P(2, 1, 1), 0)
    assert cert.kind is CertificateKind.PICARD_RANK_DIFFERS
    assert cert.payload == {"rank_a": 2, "rank_b": 3}

    cert = distinguish(P(4, 1), P(3, 2), 0)
    assert cert.kind is CertificateKind.POLYNOMIAL_DIFFERS
    assert cert.route is Route.GENUS0_SAME_LENGTH
    assert cert.payload["polynomial"] == "multiproj"
    assert (cert.payload["degree"], cert.payload["coefficient_a"], cert.payload["coefficient_b"]) == (4, 2, 3)


def test_distinguish_common_small_part_falls_back():
    # stripped parts are big, but the shared 1 is below 2g - 1
    a, b = P(5, 5, 1), P(6, 4, 1)
    cert = distinguish(a, b, 2)
    assert cert.kind is CertificateKind.POLYNOMIAL_DIFFERS
    assert cert.route is Route.FALLBACK
    assert cert.payload["polynomial"] == "multisym"
    verify_certificate(cert, a, b, 2)


def test_distinguish_rejects_bad_input():
    with pytest.raises(InvalidInputError):
        distinguish(P(3), P(2, 1, 1), 1)
    with pytest.raises(InvalidInputError):
        distinguish(P(3), P(2, 1), -1)


def test_multiproj_distinct():
    cert = multiproj_distinct([4, 1], [3, 2])
    assert cert.kind is CertificateKind.POLYNOMIAL_DIFFERS
    assert cert.payload["degree"] == 4
    assert multiproj_distinct([2, 2], [2, 2]).kind is CertificateKind.EQUAL_PARTITIONS
    # first difference is at x^4, before the x^6 terms
    cert = multiproj_distinct([6, 1], [4, 3])
    assert (cert.payload["degree"], cert.payload["coefficient_a"], cert.payload["coefficient_b"]) == (4, 2, 3)


def test_multiproj_distinct_rejects_mismatch():
    with pytest.raises(InvalidInputError):
        multiproj_distinct([3, 1], [2, 1, 1])
    with pytest.raises(InvalidInputError):
        multiproj_distinct([3, 1], [3, 2])
    with pytest.raises(InvalidInputError):
        multiproj_distinct([1, 3], [2, 2])


def test_multiproj_separation():
    for n in range(1, 19):
        by_length = {}
        for p in enumerate_partitions(n):
            by_length.setdefault(p.length, []).append(list(p.parts))
        for group in by_length.values():
            for i, dims_a in enumerate(group):
                for dims_b in group[i + 1:]:
                    assert multiproj_distinct(dims_a, dims_b).is_witness


@pytest.mark.parametrize("curve_genus", [0, 1, 2, 3])
def test_certificates_are_sound(curve_genus):
    for n in range(1, 13):
        partitions = enumerate_partitions(n)
        for i, a in enumerate(partitions):
            for b in partitions[i + 1:]:
                cert = distinguish(a, b, curve_genus)
                assert cert.is_witness
                verify_certificate(cert, a, b, curve_genus)


def test_small_part_route_separates_by_betti():
    checked = 0
    for genus in range(1, 4):
        for n in range(2, 13):
            partitions = enumerate_partitions(n)
            for i, a in enumerate(partitions):
                for b in partitions[i + 1:]:
                    if a.length != b.length:
                        continue
                    rest_a, rest_b = strip_common_parts(a, b)
                    smallest = min(rest_a + rest_b)
                    if smallest > 2 * genus - 1:
                        continue
                    cert = distinguish(a, b, genus)
                    assert cert.kind is CertificateKind.BETTI_DIFFERS
                    assert cert.route is Route.SMALL_PARTS
                    payload = cert.payload
                    assert payload["degree"] == smallest + 1
                    assert payload["betti_a"] != payload["betti_b"]
                    assert payload["betti_a"] == multi_sym_poincare(a, genus).coefficient(smallest + 1)
                    assert payload["betti_b"] == multi_sym_poincare(b, genus).coefficient(smallest + 1)
                    checked += 1
    assert checked > 0


@pytest.mark.parametrize("curve_genus", [1, 2, 3])
def test_poincare_polynomials_separate_partitions(curve_genus):
    for n in range(1, 13):
        polys = {multi_sym_poincare(p, curve_genus).coeffs for p in enumerate_partitions(n)}
        assert len(polys) == partition_count(n)


def test_verify_certificate_rejects_tampering():
    a, b = P(4, 1), P(3, 2)
    cert = distinguish(a, b, 1)
    forged = NonIsoCertificate(cert.kind, {**cert.payload, "betti_b": 7}, cert.route)
    with pytest.raises(CertificateError):
        verify_certificate(forged, a, b, 1)
    with pytest.raises(CertificateError):
        verify_certificate(cert, a, a, 1)


@pytest.mark.parametrize("curve_genus", [0, 1, 2, 3])
def test_classification_attains_bound(curve_genus):
    for n in range(1, 13):
        report = classify_hilbert_schemes(n, curve_genus, verify=True)
        assert report.count == partition_count(n)
        assert report.attains_bound
        assert len(report.certificates) == len(report.partitions) * (len(report.partitions) - 1) // 2


def test_classification_examples():
    assert classify_hilbert_schemes(3, 4).count == 3
    assert classify_hilbert_schemes(5, 0).count == 7
    assert classify_hilbert_schemes(5, 1).count == 7


def test_small_n_lengths_all_differ():
    for n in (1, 2, 3):
        for genus in range(6):
            report = classify_hilbert_schemes(n, genus)
            assert report.count == partition_count(n)
            for pair in report.certificates:
                assert pair.a.length != pair.b.length


def test_genus_zero_routing():
    for n in range(1, 13):
        report = classify_hilbert_schemes(n, 0)
        assert set(report.routing) <= {"PicardRankDiffers", "PolynomialDiffers"}


def test_classification_report_contents():
    report = classify_hilbert_schemes(4, 1)
    assert [p.parts for p in report.partitions] == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert [(c.index_a, c.index_b) for c in report.certificates][:3] == [(0, 1), (0, 2), (0, 3)]
    assert sum(report.routing.values()) == 10
    assert len(report.digest) == 64
    assert report.summaries[1].first_betti == 4
    assert report.summaries[1].dimension == 4


def test_classification_with_workers_is_deterministic():
    serial = classify_hilbert_schemes(9, 2, workers=1)
    threaded = classify_hilbert_schemes(9, 2, workers=4)
    assert serial.digest == threaded.digest
    assert serial.certificate_table() == threaded.certificate_table()


def test_classification_workers_from_settings(monkeypatch):
    from utils.settings import get_settings

    monkeypatch.setenv("CLASSIFY_WORKERS", "3")
    get_settings.cache_clear()
    assert get_settings().classify_workers == 3
    assert classify_hilbert_schemes(6, 1).count == 11


def test_hilbert_scheme_summary():
    summary = hilbert_scheme_summary(P(3, 2), 2)
    assert summary.dimension == 5
    assert summary.first_betti == 8
    assert summary.picard_rank_genus0 == 2
    assert summary.has_diagonal_property
    # chi(Sym^3) vanishes at g = 2
    assert summary.euler_characteristic == 0
    assert hilbert_scheme_summary(P(2, 1), 3).euler_characteristic == 6 * -4
    assert Counter(fiber_dimensions(P(4, 4), 1)) == Counter([3, 3])
