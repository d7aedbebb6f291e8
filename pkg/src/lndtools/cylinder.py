"""Deciding invariant cylinders and building their trivializations.

For a locally nilpotent derivation, the principal open set where a kernel
element h is invertible splits off a line factor exactly when some power
of h is the image of a ring element.  The routines here search for such a
power within explicit bounds, assemble checkable certificates on success
(the slice f/h^n together with invariant coordinates produced by the
Dixmier map), and return exact linear-algebra infeasibility certificates
when no slice of bounded degree exists.  The search is a semi-decision:
"no" is only ever reported when h itself fails the kernel test, which is
conclusive because kernels of locally nilpotent derivations on domains
are factorially closed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Sequence

from .derivation import DEFAULT_NILPOTENCY_CAP, CapExceededError, Derivation
from .groebner import Ideal, gcd_via_lcm, standard_monomials
from .linalg import Inconsistency, QMatrix, solve_exact
from .poly import DEGREVLEX, Monomial, Polynomial
from .ratfun import RationalFunction, ratfun_eq_mod


class Outcome(Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown at bounds"


class CertificateError(Exception):
    """A certificate failed its own re-verification."""


@dataclass(frozen=True)
class SearchBounds:
    """Caps for the bounded search: powers of h up to ``max_power`` and
    preimages of total degree up to ``max_degree``."""

    max_power: int = 4
    max_degree: int = 8

    def __post_init__(self):
        if self.max_power < 1:
            raise ValueError("max_power must be at least 1")
        if self.max_degree < 0:
            raise ValueError("max_degree must be non-negative")


@dataclass(frozen=True)
class PlinthCertificate:
    """Witness that element^power is both a kernel element and an image:
    derivation(preimage) equals element^power modulo the relations."""

    derivation: Derivation
    element: Polynomial
    power: int
    preimage: Polynomial

    def __post_init__(self):
        ring = self.derivation.ring
        if self.derivation.apply(self.element):
            raise CertificateError("claimed element is not in the kernel")
        target = ring.normal_form(self.element ** self.power)
        if self.derivation.apply(self.preimage) != target:
            raise CertificateError("preimage does not hit the claimed power")


@dataclass(frozen=True)
class CylinderCertificate:
    """A verified product decomposition over the open set D(element).

    ``slice_value`` has derivative one there, and the Dixmier images of
    the ring generators are derivation constants; together they give the
    coordinates of the decomposition."""

    plinth: PlinthCertificate
    slice_value: RationalFunction
    dixmier_images: tuple[RationalFunction, ...]

    def __post_init__(self):
        deriv = self.plinth.derivation
        relations = deriv.ring.relations
        if not ratfun_eq_mod(relations, deriv.apply_rational(self.slice_value), 1):
            raise CertificateError("slice does not have derivative one")
        for image in self.dixmier_images:
            if not ratfun_eq_mod(relations, deriv.apply_rational(image), 0):
                raise CertificateError("Dixmier image is not a derivation constant")


@dataclass(frozen=True)
class NoSliceCertificate:
    """Exact proof that no element of total degree <= degree_bound has
    derivative one: multipliers combining the linear system to 0 = value."""

    degree_bound: int
    equations: int
    unknowns: int
    row_monomials: tuple[Monomial, ...]
    inconsistency: Inconsistency

    def nonzero_multipliers(self) -> list[tuple[Monomial, Fraction]]:
        return [(m, y) for m, y in zip(self.row_monomials,
                                       self.inconsistency.multipliers) if y]


@dataclass(frozen=True)
class PreimageResult:
    preimage: Polynomial | None
    certificate: Inconsistency | None
    degree_bound: int
    row_monomials: tuple[Monomial, ...]
    column_monomials: tuple[Monomial, ...]

    @property
    def found(self) -> bool:
        return self.preimage is not None


@dataclass(frozen=True)
class PlinthResult:
    outcome: Outcome
    element: Polynomial
    bounds: SearchBounds
    certificate: PlinthCertificate | None = None
    obstruction: Polynomial | None = None


@dataclass(frozen=True)
class CylinderResult:
    outcome: Outcome
    element: Polynomial
    bounds: SearchBounds
    certificate: CylinderCertificate | None = None
    obstruction: Polynomial | None = None


@dataclass(frozen=True)
class SliceSearchResult:
    slice_poly: Polynomial | None
    certificate: NoSliceCertificate | None

    @property
    def found(self) -> bool:
        return self.slice_poly is not None


@dataclass(frozen=True)
class PlinthClaimReport:
    outcome: Outcome
    entries: tuple[PlinthResult, ...]
    complement: Ideal


@dataclass(frozen=True)
class PrincipalityResult:
    is_principal: bool
    gcd: Polynomial
    generator: Polynomial | None


@dataclass(frozen=True)
class MaximalCylinderResult:
    outcome: Outcome
    claim: PlinthClaimReport
    principality: PrincipalityResult | None = None
    cylinder: CylinderResult | None = None


def kernel_check(derivation: Derivation, f: Polynomial) -> bool:
    return derivation.apply(f).is_zero


def build_preimage_system(derivation: Derivation, target: Polynomial,
                          max_degree: int):
    """Linear system whose solutions are coefficient vectors, over the
    standard monomials of degree <= max_degree, of elements mapping to
    ``target``.  Requires a degree-compatible order so that this captures
    every residue class of bounded degree."""
    ring = derivation.ring
    if ring.order != DEGREVLEX:
        raise ValueError("bounded preimage search needs a degree-compatible order")
    columns = tuple(standard_monomials(ring.relations, max_degree))
    images = [derivation.apply(Polynomial.monomial(ring.nvars, m))
              for m in columns]
    seen = set(target.terms)
    for img in images:
        seen.update(img.terms)
    rows = tuple(sorted(seen, key=ring.order.key, reverse=True))
    matrix = QMatrix([[img.coefficient(r) for img in images] for r in rows])
    rhs = tuple(target.coefficient(r) for r in rows)
    return columns, rows, matrix, rhs


def preimage_search(derivation: Derivation, target: Polynomial,
                    max_degree: int) -> PreimageResult:
    """Find f of total degree <= max_degree with derivation(f) = target
    modulo the relations, or prove that none exists in that range."""
    ring = derivation.ring
    target = ring.normal_form(target)
    columns, rows, matrix, rhs = build_preimage_system(derivation, target,
                                                       max_degree)
    solved = solve_exact(matrix, rhs)
    if isinstance(solved, Inconsistency):
        return PreimageResult(None, solved, max_degree, rows, columns)
    preimage = Polynomial(ring.nvars,
                          {m: c for m, c in zip(columns, solved) if c})
    if derivation.apply(preimage) != target:
        raise CertificateError("solver returned a spurious preimage")
    return PreimageResult(preimage, None, max_degree, rows, columns)


def plinth_membership(derivation: Derivation, element: Polynomial,
                      bounds: SearchBounds = SearchBounds()) -> PlinthResult:
    """Decide whether some power of ``element`` is a kernel element that
    is also an image, within the given bounds."""
    if element.is_zero:
        raise ValueError("the zero element is excluded; its open set is empty")
    ring = derivation.ring
    h = ring.normal_form(element)
    if h.is_zero:
        raise ValueError("element vanishes on the variety; its open set is empty")
    image = derivation.apply(h)
    if image:
        # Kernels are factorially closed in a domain, so no power of a
        # non-kernel element can ever land in the kernel: a conclusive no.
        return PlinthResult(Outcome.NO, h, bounds, obstruction=image)
    power = Polynomial.constant(ring.nvars, 1)
    for n in range(1, bounds.max_power + 1):
        power = ring.normal_form(power * h)
        search = preimage_search(derivation, power, bounds.max_degree)
        if search.found:
            cert = PlinthCertificate(derivation, h, n, search.preimage)
            return PlinthResult(Outcome.YES, h, bounds, certificate=cert)
    return PlinthResult(Outcome.UNKNOWN, h, bounds)


def dixmier_image(derivation: Derivation, slice_value: RationalFunction,
                  element: Polynomial,
                  cap: int = DEFAULT_NILPOTENCY_CAP) -> RationalFunction:
    """Projection of ``element`` onto derivation constants along the slice:
    sum((-slice)^j d^j(element) / j!)."""
    ring = derivation.ring
    total = RationalFunction.zero(ring.nvars)
    sign_slice = -slice_value
    slice_power = RationalFunction(Polynomial.constant(ring.nvars, 1), 1)
    current = ring.normal_form(element)
    j = 0
    while current:
        total = total + slice_power * current * Fraction(1, math.factorial(j))
        current = derivation.apply(current)
        j += 1
        if j > cap:
            raise CapExceededError(cap)
        slice_power = slice_power * sign_slice
    return total.reduce_mod(ring.relations).simplify()


def dixmier_reduce(derivation: Derivation, slice_value: RationalFunction,
                   element: Polynomial,
                   cap: int = DEFAULT_NILPOTENCY_CAP) -> tuple[RationalFunction, ...]:
    """Coefficients c_k, all derivation constants, with
    element = sum(c_k * slice^k) modulo the relations."""
    ring = derivation.ring
    relations = ring.relations
    if not ratfun_eq_mod(relations, derivation.apply_rational(slice_value), 1):
        raise ValueError("the given value is not a slice on this open set")
    coefficients: list[RationalFunction] = []
    current = ring.normal_form(element)
    k = 0
    while current or not coefficients:
        c = dixmier_image(derivation, slice_value, current, cap) \
            * Fraction(1, math.factorial(k))
        if not ratfun_eq_mod(relations, derivation.apply_rational(c), 0):
            raise CertificateError("Dixmier coefficient is not a constant")
        coefficients.append(c)
        if not current:
            break
        current = derivation.apply(current)
        k += 1
        if k > cap:
            raise CapExceededError(cap)
    reconstructed = RationalFunction.zero(ring.nvars)
    for k, c in enumerate(coefficients):
        reconstructed = reconstructed + c * slice_value ** k
    if not ratfun_eq_mod(relations, reconstructed, element):
        raise CertificateError("Dixmier coefficients do not reconstruct the element")
    while coefficients and coefficients[-1].is_zero:
        coefficients.pop()
    if not coefficients:
        coefficients = [RationalFunction.zero(ring.nvars)]
    return tuple(coefficients)


def cylinder_decision(derivation: Derivation, element: Polynomial,
                      bounds: SearchBounds = SearchBounds()) -> CylinderResult:
    """Decide whether the open set D(element) is an invariant cylinder,
    with a slice and invariant coordinates on success."""
    plinth = plinth_membership(derivation, element, bounds)
    if plinth.outcome is not Outcome.YES:
        return CylinderResult(plinth.outcome, plinth.element, bounds,
                              obstruction=plinth.obstruction)
    cert = plinth.certificate
    slice_value = RationalFunction(cert.preimage, cert.element ** cert.power)
    ring = derivation.ring
    images = tuple(
        dixmier_image(derivation, slice_value,
                      Polynomial.variable(ring.nvars, i))
        for i in range(ring.nvars))
    full = CylinderCertificate(cert, slice_value, images)
    return CylinderResult(Outcome.YES, plinth.element, bounds, certificate=full)


def slice_nonexistence(derivation: Derivation,
                       max_degree: int) -> SliceSearchResult:
    """Search for a global polynomial slice of bounded degree; failure is
    certified exactly."""
    one = Polynomial.constant(derivation.ring.nvars, 1)
    result = preimage_search(derivation, one, max_degree)
    if result.found:
        return SliceSearchResult(result.preimage, None)
    cert = NoSliceCertificate(max_degree, len(result.row_monomials),
                              len(result.column_monomials),
                              result.row_monomials, result.certificate)
    return SliceSearchResult(None, cert)


def plinth_claim_verify(derivation: Derivation, claimed: Sequence[Polynomial],
                        bounds: SearchBounds = SearchBounds()) -> PlinthClaimReport:
    """Check a claimed plinth generating set: every generator must pass the
    kernel test and exhibit a power with a preimage.  Also returns the
    ideal the claimed generators span; on the variety its zero locus is
    the complement of the union of invariant principal cylinders."""
    if not claimed:
        raise ValueError("no generators claimed")
    entries = tuple(plinth_membership(derivation, g, bounds) for g in claimed)
    if any(e.outcome is Outcome.NO for e in entries):
        outcome = Outcome.NO
    elif any(e.outcome is Outcome.UNKNOWN for e in entries):
        outcome = Outcome.UNKNOWN
    else:
        outcome = Outcome.YES
    ring = derivation.ring
    complement = Ideal(ring.nvars, tuple(e.element for e in entries),
                       ring.order)
    return PlinthClaimReport(outcome, entries, complement)


def principality_check(generators: Sequence[Polynomial]) -> PrincipalityResult:
    """Whether the ideal spanned by the generators is principal, in a free
    polynomial ring.  Callers working inside a kernel subalgebra must
    present the generators in free coordinates for that subalgebra."""
    gens = [g for g in generators if g]
    if not gens:
        raise ValueError("need at least one nonzero generator")
    gcd = gens[0].content_split(DEGREVLEX)[1]
    for g in gens[1:]:
        gcd = gcd_via_lcm(gcd, g)
    ideal = Ideal(gens[0].nvars, tuple(gens), DEGREVLEX)
    if ideal.contains(gcd):
        return PrincipalityResult(True, gcd, gcd)
    return PrincipalityResult(False, gcd, None)


def maximal_cylinder(derivation: Derivation, claimed: Sequence[Polynomial],
                     bounds: SearchBounds = SearchBounds()) -> MaximalCylinderResult:
    """If the claimed plinth generators verify and span a principal ideal,
    the cylinder over the principal generator contains every other
    principal invariant cylinder; build its certificate."""
    claim = plinth_claim_verify(derivation, claimed, bounds)
    if claim.outcome is not Outcome.YES:
        return MaximalCylinderResult(claim.outcome, claim)
    principality = principality_check([e.element for e in claim.entries])
    if not principality.is_principal:
        return MaximalCylinderResult(Outcome.NO, claim, principality)
    decision = cylinder_decision(derivation, principality.generator, bounds)
    return MaximalCylinderResult(decision.outcome, claim, principality, decision)
