"""Non-isomorphism certificates for multi symmetric products and the p(n) classification."""

from .invariants import (
    HilbertSchemeSummary,
    MultiSymProduct,
    fiber_dimensions,
    first_betti_multi,
    hilbert_scheme_summary,
    riemann_roch_h0,
)
from .certificates import (
    CertificateKind,
    NonIsoCertificate,
    Route,
    distinguish,
    multiproj_distinct,
    verify_certificate,
)
from .classification import ClassificationReport, PairCertificate, classify_hilbert_schemes

__all__ = [
    'HilbertSchemeSummary',
    'MultiSymProduct',
    'fiber_dimensions',
    'first_betti_multi',
    'hilbert_scheme_summary',
    'riemann_roch_h0',
    'CertificateKind',
    'NonIsoCertificate',
    'Route',
    'distinguish',
    'multiproj_distinct',
    'verify_certificate',
    'ClassificationReport',
    'PairCertificate',
    'classify_hilbert_schemes',
]
