"""Exact Bernoulli/Euler polynomial algebra and a verifier for symmetric
identities between them."""

from .identities import (
    CATALOG,
    CERTIFIED_IDS,
    DomainError,
    IdentityId,
    IdentityReport,
    SuiteReport,
    identity_sides,
    verify_identity,
    verify_lemma2,
    verify_range,
    woodcock_number,
    woodcock_poly_A,
    woodcock_poly_C,
)
from .poly import (
    AffineArg,
    BiPoly,
    DegreeBoundError,
    Rational,
    UniPoly,
    binomial,
    degree_limit,
)
from .sequences import (
    RationalSeq,
    SequenceCache,
    bernoulli_number,
    bernoulli_poly,
    dual_transform,
    euler_number,
    euler_poly,
)

__version__ = "0.1.0"
