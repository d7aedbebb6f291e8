"""Derivations of finitely presented rings and the actions they generate.

A derivation is given by its images on the ring generators and extends by
the Leibniz rule.  When every generator is annihilated by some iterate,
exponentiation yields a polynomial one-parameter family of automorphisms:
the orbit map of the corresponding additive group action.  Everything is
computed on representatives and reduced modulo the relation ideal, which
is sound once the derivation is known to preserve that ideal.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .groebner import Ideal
from .poly import DEGREVLEX, Polynomial, Scalar, SPoly
from .ratfun import RationalFunction

DEFAULT_NILPOTENCY_CAP = 64


class CapExceededError(Exception):
    """An iterated application failed to vanish within the cap; the
    nilpotency question stays open at this bound."""

    def __init__(self, cap: int, what: str = "element"):
        super().__init__(f"derivation did not annihilate {what} within {cap} steps")
        self.cap = cap


class RingPresentation:
    """Named variables together with a relation ideal."""

    __slots__ = ("names", "relations")

    def __init__(self, names: Sequence[str], relations: Ideal | None = None):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError("duplicate variable names")
        if not names:
            raise ValueError("a presentation needs at least one variable")
        if relations is None:
            relations = Ideal(len(names), (), DEGREVLEX)
        if relations.nvars != len(names):
            raise ValueError("relation ideal has wrong variable count")
        if relations.is_trivial:
            raise ValueError("relations generate the unit ideal; "
                             "the presented ring is zero")
        self.names = names
        self.relations = relations

    @classmethod
    def free(cls, names: Sequence[str]) -> "RingPresentation":
        return cls(names, None)

    @property
    def nvars(self) -> int:
        return len(self.names)

    @property
    def order(self):
        return self.relations.order

    def normal_form(self, f: Polynomial) -> Polynomial:
        return self.relations.normal_form(f)

    def variable(self, name: str) -> Polynomial:
        return Polynomial.variable(self.nvars, self.names.index(name))

    def __repr__(self):
        return f"RingPresentation({', '.join(self.names)})"


@dataclass(frozen=True)
class PreservationReport:
    """Outcome of checking that the relation ideal is preserved."""

    ok: bool
    offender: Polynomial | None = None
    image: Polynomial | None = None


@dataclass(frozen=True)
class NilpotencyWitness:
    """Per-generator vanishing orders: orders[i] applications kill the
    i-th variable.  Entries in ``exceeded`` did not vanish within the cap."""

    orders: tuple[int | None, ...]
    cap: int
    exceeded: tuple[str, ...]

    @property
    def is_nilpotent(self) -> bool:
        return not self.exceeded


@dataclass(frozen=True)
class FixedLocus:
    """Vanishing locus of all derivation images inside the variety."""

    ideal: Ideal


class Derivation:
    """A derivation of a presented ring, stored via generator images.

    Images are kept in normal form modulo the relations.  ``apply`` is
    well defined on the quotient only when the derivation preserves the
    relation ideal; use :meth:`check_preserves_relations` to confirm.
    """

    __slots__ = ("ring", "images")

    def __init__(self, ring: RingPresentation, images: Sequence[Polynomial]):
        images = tuple(images)
        if len(images) != ring.nvars:
            raise ValueError("need exactly one image per variable")
        for g in images:
            if g.nvars != ring.nvars:
                raise ValueError("image has wrong variable count")
        self.ring = ring
        self.images = tuple(ring.normal_form(g) for g in images)

    def apply(self, f: Polynomial) -> Polynomial:
        """Leibniz extension, reduced modulo the relations."""
        total = Polynomial.zero(self.ring.nvars)
        for i, image in enumerate(self.images):
            if image:
                total = total + image * f.diff(i)
        return self.ring.normal_form(total)

    def check_preserves_relations(self) -> PreservationReport:
        for g in self.ring.relations.generators:
            image = self.apply(g)
            if image:
                return PreservationReport(False, g, image)
        return PreservationReport(True)

    def nilpotency_witness(self,
                           cap: int = DEFAULT_NILPOTENCY_CAP) -> NilpotencyWitness:
        orders: list[int | None] = []
        exceeded: list[str] = []
        for i, name in enumerate(self.ring.names):
            power = self.ring.normal_form(Polynomial.variable(self.ring.nvars, i))
            steps = 0
            while power and steps <= cap:
                power = self.apply(power)
                steps += 1
            if power:
                orders.append(None)
                exceeded.append(name)
            else:
                orders.append(steps)
        return NilpotencyWitness(tuple(orders), cap, tuple(exceeded))

    def exp_action(self, f: Polynomial,
                   cap: int = DEFAULT_NILPOTENCY_CAP) -> SPoly:
        """Exponential sum(s^k d^k(f) / k!) as a parameter polynomial."""
        coeffs = [self.ring.normal_form(f)]
        current = coeffs[0]
        k = 0
        while current:
            current = self.apply(current)
            k += 1
            if k > cap:
                raise CapExceededError(cap)
            if current:
                coeffs.append(current * Fraction(1, math.factorial(k)))
        return SPoly(self.ring.nvars, coeffs)

    def orbit_point(self, point: Sequence[Scalar], time: Scalar,
                    cap: int = DEFAULT_NILPOTENCY_CAP) -> tuple[Fraction, ...]:
        """Move a rational point of the variety for the given time."""
        p = tuple(Fraction(v) for v in point)
        if len(p) != self.ring.nvars:
            raise ValueError("point length does not match variable count")
        for g in self.ring.relations.generators:
            if g.evaluate(p):
                raise ValueError("point does not satisfy the relations")
        s = Fraction(time)
        moved = tuple(
            self.exp_action(Polynomial.variable(self.ring.nvars, i),
                            cap).substitute(s).evaluate(p)
            for i in range(self.ring.nvars))
        for g in self.ring.relations.generators:
            # Holds whenever the derivation preserves the relations.
            assert not g.evaluate(moved), "orbit left the variety"
        return moved

    def fixed_locus(self) -> FixedLocus:
        gens = [g for g in self.images if g]
        gens.extend(self.ring.relations.generators)
        return FixedLocus(Ideal(self.ring.nvars, gens, self.ring.order))

    def apply_rational(self, value: RationalFunction) -> RationalFunction:
        """Quotient-rule extension to fractions with invertible denominator."""
        if self.ring.normal_form(value.den).is_zero:
            raise ZeroDivisionError("denominator lies in the relation ideal")
        num = value.den * self.apply_free(value.num) \
            - value.num * self.apply_free(value.den)
        return RationalFunction(num, value.den * value.den).simplify()

    def apply_free(self, f: Polynomial) -> Polynomial:
        """Leibniz extension without reduction; used where numerator and
        denominator must stay aligned as free-ring representatives."""
        total = Polynomial.zero(self.ring.nvars)
        for i, image in enumerate(self.images):
            if image:
                total = total + image * f.diff(i)
        return total

    def __repr__(self):
        return f"Derivation on {self.ring!r}"
