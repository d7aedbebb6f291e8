"""Exact computations with locally nilpotent derivations on affine varieties.

The package works over the rationals with sparse exact polynomials, decides
kernel and plinth membership by bounded certificate search, and produces
cylinder trivializations through slice coordinates.
"""

from .cylinder import (
    CertificateError,
    CylinderCertificate,
    CylinderResult,
    MaximalCylinderResult,
    NoSliceCertificate,
    Outcome,
    PlinthCertificate,
    PlinthClaimReport,
    PlinthResult,
    PreimageResult,
    PrincipalityResult,
    SearchBounds,
    SliceSearchResult,
    build_preimage_system,
    cylinder_decision,
    dixmier_image,
    dixmier_reduce,
    kernel_check,
    maximal_cylinder,
    plinth_claim_verify,
    plinth_membership,
    preimage_search,
    principality_check,
    slice_nonexistence,
)
from .derivation import (
    DEFAULT_NILPOTENCY_CAP,
    CapExceededError,
    Derivation,
    FixedLocus,
    NilpotencyWitness,
    PreservationReport,
    RingPresentation,
)
from .groebner import (
    Ideal,
    buchberger,
    divide_exact,
    eliminate,
    gcd_via_lcm,
    ideal_membership,
    lcm_via_intersection,
    normal_form,
    radical_membership,
    reduce_poly,
    standard_monomials,
)
from .linalg import Inconsistency, QMatrix, rank, solve_exact
from .parsing import (
    DerivationSpec,
    ParseError,
    format_spec,
    parse_fraction,
    parse_point,
    parse_polynomial,
    parse_polynomial_list,
    parse_spec,
    spec_derivation,
    spec_ring,
)
from .poly import (
    DEGREVLEX,
    LEX,
    MonomialOrder,
    Polynomial,
    SPoly,
    SPoly2,
    elimination,
    monomials_up_to,
)
from .printing import (
    format_ideal,
    format_monomial,
    format_point,
    format_polynomial,
    format_ratfun,
    format_spoly,
)
from .ratfun import RationalFunction, ratfun_eq_mod

__version__ = "0.1.0"

__all__ = [
    "CapExceededError",
    "CertificateError",
    "CylinderCertificate",
    "CylinderResult",
    "DEFAULT_NILPOTENCY_CAP",
    "DEGREVLEX",
    "Derivation",
    "DerivationSpec",
    "FixedLocus",
    "Ideal",
    "Inconsistency",
    "LEX",
    "MaximalCylinderResult",
    "MonomialOrder",
    "NilpotencyWitness",
    "NoSliceCertificate",
    "Outcome",
    "ParseError",
    "PlinthCertificate",
    "PlinthClaimReport",
    "PlinthResult",
    "Polynomial",
    "PreimageResult",
    "PreservationReport",
    "PrincipalityResult",
    "QMatrix",
    "RationalFunction",
    "RingPresentation",
    "SPoly",
    "SPoly2",
    "SearchBounds",
    "SliceSearchResult",
    "buchberger",
    "build_preimage_system",
    "cylinder_decision",
    "divide_exact",
    "dixmier_image",
    "dixmier_reduce",
    "eliminate",
    "elimination",
    "format_ideal",
    "format_monomial",
    "format_point",
    "format_polynomial",
    "format_ratfun",
    "format_spec",
    "format_spoly",
    "gcd_via_lcm",
    "ideal_membership",
    "kernel_check",
    "lcm_via_intersection",
    "maximal_cylinder",
    "monomials_up_to",
    "normal_form",
    "parse_fraction",
    "parse_point",
    "parse_polynomial",
    "parse_polynomial_list",
    "parse_spec",
    "plinth_claim_verify",
    "plinth_membership",
    "preimage_search",
    "principality_check",
    "radical_membership",
    "rank",
    "ratfun_eq_mod",
    "reduce_poly",
    "slice_nonexistence",
    "solve_exact",
    "spec_derivation",
    "spec_ring",
    "standard_monomials",
]
