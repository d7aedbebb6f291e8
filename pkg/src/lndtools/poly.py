"""Exact sparse multivariate arithmetic over the rationals.

Monomials are tuples of non-negative exponents, one slot per ring
variable.  A polynomial stores a sparse mapping from monomials to nonzero
``Fraction`` coefficients, so every computation in the package is exact.
All values are immutable by convention: operations return new objects and
never mutate their operands.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence, Union

Monomial = tuple[int, ...]
Scalar = Union[int, Fraction]

_ZERO = Fraction(0)


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    """True when x^a divides x^b."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    """Exponent vector of x^a / x^b; b must divide a."""
    out = tuple(x - y for x, y in zip(a, b))
    if any(e < 0 for e in out):
        raise ValueError(f"{b} does not divide {a}")
    return out


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_degree(a: Monomial) -> int:
    return sum(a)


def _grevlex_key(exps: Monomial):
    return (sum(exps), tuple(-e for e in reversed(exps)))


class MonomialOrder:
    """Total order on monomials, compatible with multiplication.

    ``key`` maps a monomial to a tuple that compares the way the order
    does, so ``max(monos, key=order.key)`` picks the leading monomial.
    """

    __slots__ = ("kind", "block")

    def __init__(self, kind: str, block: int = 0):
        if kind not in ("lex", "degrevlex", "elimination"):
            raise ValueError(f"unknown monomial order {kind!r}")
        if kind == "elimination" and block < 1:
            raise ValueError("elimination order needs a positive block size")
        self.kind = kind
        self.block = block if kind == "elimination" else 0

    def key(self, mono: Monomial):
        if self.kind == "lex":
            return mono
        if self.kind == "degrevlex":
            return _grevlex_key(mono)
        k = self.block
        return (_grevlex_key(mono[:k]), _grevlex_key(mono[k:]))

    def is_elimination_for(self, k: int) -> bool:
        """Whether every monomial touching the first k variables dominates
        every monomial free of them."""
        if k == 0 or self.kind == "lex":
            return True
        return self.kind == "elimination" and self.block == k

    def __eq__(self, other):
        if not isinstance(other, MonomialOrder):
            return NotImplemented
        return self.kind == other.kind and self.block == other.block

    def __hash__(self):
        return hash((self.kind, self.block))

    def __repr__(self):
        if self.kind == "elimination":
            return f"elimination({self.block})"
        return self.kind


LEX = MonomialOrder("lex")
DEGREVLEX = MonomialOrder("degrevlex")


def elimination(block: int) -> MonomialOrder:
    """Block order whose first ``block`` variables dominate the rest."""
    return MonomialOrder("elimination", block)


class Polynomial:
    """Sparse polynomial with exact rational coefficients."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int,
                 terms: Mapping[Monomial, Scalar] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Monomial, Fraction] = {}
        for mono, coeff in items:
            mono = tuple(mono)
            if len(mono) != nvars:
                raise ValueError(f"monomial {mono} does not fit {nvars} variables")
            if any(e < 0 for e in mono):
                raise ValueError(f"negative exponent in {mono}")
            c = clean.get(mono, _ZERO) + Fraction(coeff)
            if c:
                clean[mono] = c
            elif mono in clean:
                del clean[mono]
        self.nvars = nvars
        self.terms = clean

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, value: Scalar) -> "Polynomial":
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def variable(cls, nvars: int, index: int) -> "Polynomial":
        if not 0 <= index < nvars:
            raise ValueError(f"variable index {index} out of range")
        mono = tuple(1 if i == index else 0 for i in range(nvars))
        return cls(nvars, {mono: 1})

    @classmethod
    def monomial(cls, nvars: int, mono: Monomial, coeff: Scalar = 1) -> "Polynomial":
        return cls(nvars, {tuple(mono): coeff})

    # ------------------------------------------------------------------
    # structure

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def coefficient(self, mono: Monomial) -> Fraction:
        return self.terms.get(tuple(mono), _ZERO)

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * self.nvars, _ZERO)

    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(mono_degree(m) for m in self.terms)

    def leading_term(self, order: MonomialOrder) -> tuple[Monomial, Fraction]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        mono = max(self.terms, key=order.key)
        return mono, self.terms[mono]

    def leading_monomial(self, order: MonomialOrder) -> Monomial:
        return self.leading_term(order)[0]

    def monic(self, order: MonomialOrder) -> "Polynomial":
        _, lc = self.leading_term(order)
        if lc == 1:
            return self
        return self * (1 / lc)

    def content_split(self, order: MonomialOrder) -> tuple[Fraction, "Polynomial"]:
        """Split into (content, primitive part).

        The primitive part has coprime integer coefficients with a positive
        leading coefficient under ``order``; self == content * primitive.
        """
        if not self.terms:
            return _ZERO, self
        num_gcd = 0
        den_lcm = 1
        for c in self.terms.values():
            num_gcd = math.gcd(num_gcd, abs(c.numerator))
            den_lcm = den_lcm * c.denominator // math.gcd(den_lcm, c.denominator)
        content = Fraction(num_gcd, den_lcm)
        if self.leading_term(order)[1] < 0:
            content = -content
        return content, self * (1 / content)

    # ------------------------------------------------------------------
    # arithmetic

    def _coerce(self, other) -> "Polynomial | None":
        if isinstance(other, Polynomial):
            if other.nvars != self.nvars:
                raise ValueError("variable counts differ")
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.nvars, other)
        return None

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for mono, c in other.terms.items():
            s = terms.get(mono, _ZERO) + c
            if s:
                terms[mono] = s
            elif mono in terms:
                del terms[mono]
        out = Polynomial.__new__(Polynomial)
        out.nvars = self.nvars
        out.terms = terms
        return out

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        out = Polynomial.__new__(Polynomial)
        out.nvars = self.nvars
        out.terms = {m: -c for m, c in self.terms.items()}
        return out

    def __sub__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                return Polynomial.zero(self.nvars)
            out = Polynomial.__new__(Polynomial)
            out.nvars = self.nvars
            out.terms = {m: v * c for m, v in self.terms.items()}
            return out
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                s = terms.get(m, _ZERO) + c1 * c2
                if s:
                    terms[m] = s
                elif m in terms:
                    del terms[m]
        out = Polynomial.__new__(Polynomial)
        out.nvars = self.nvars
        out.terms = terms
        return out

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Polynomial.constant(self.nvars, 1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.nvars, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    # ------------------------------------------------------------------
    # calculus and evaluation

    def diff(self, index: int) -> "Polynomial":
        """Formal partial derivative with respect to variable ``index``."""
        if not 0 <= index < self.nvars:
            raise ValueError(f"variable index {index} out of range")
        terms: dict[Monomial, Fraction] = {}
        for mono, c in self.terms.items():
            e = mono[index]
            if e == 0:
                continue
            lowered = mono[:index] + (e - 1,) + mono[index + 1:]
            terms[lowered] = terms.get(lowered, _ZERO) + c * e
        return Polynomial(self.nvars, terms)

    def evaluate(self, point: Sequence[Scalar]) -> Fraction:
        if len(point) != self.nvars:
            raise ValueError("point length does not match variable count")
        values = [Fraction(v) for v in point]
        total = _ZERO
        for mono, c in self.terms.items():
            term = c
            for v, e in zip(values, mono):
                if e:
                    term *= v ** e
            total += term
        return total

    # ------------------------------------------------------------------
    # variable plumbing (used by elimination and saturation tricks)

    def pad(self, left: int = 0, right: int = 0) -> "Polynomial":
        """Embed into a ring with extra variables on either side."""
        n = self.nvars + left + right
        terms = {(0,) * left + m + (0,) * right: c for m, c in self.terms.items()}
        return Polynomial(n, terms)

    def drop_first(self, k: int) -> "Polynomial":
        """Forget the first k variables; they must not occur."""
        terms = {}
        for mono, c in self.terms.items():
            if any(mono[:k]):
                raise ValueError("polynomial involves a dropped variable")
            terms[mono[k:]] = c
        return Polynomial(self.nvars - k, terms)

    def __repr__(self):
        from .printing import format_polynomial

        names = tuple(f"x{i}" for i in range(self.nvars))
        return f"<{format_polynomial(self, names)}>"


class SPoly:
    """Polynomial in one adjoined parameter with ring-polynomial coefficients.

    ``coeffs[k]`` is the coefficient of the k-th power of the parameter.
    """

    __slots__ = ("nvars", "coeffs")

    def __init__(self, nvars: int, coeffs: Iterable[Polynomial] = ()):
        stack = list(coeffs)
        for c in stack:
            if c.nvars != nvars:
                raise ValueError("coefficient has wrong variable count")
        while stack and stack[-1].is_zero:
            stack.pop()
        self.nvars = nvars
        self.coeffs = tuple(stack)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, k: int) -> Polynomial:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Polynomial.zero(self.nvars)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        if not isinstance(other, SPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.coeffs == other.coeffs

    def __add__(self, other: "SPoly") -> "SPoly":
        if not isinstance(other, SPoly):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return SPoly(self.nvars,
                     [self.coefficient(k) + other.coefficient(k) for k in range(n)])

    def __neg__(self) -> "SPoly":
        return SPoly(self.nvars, [-c for c in self.coeffs])

    def __sub__(self, other: "SPoly") -> "SPoly":
        if not isinstance(other, SPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> "SPoly":
        if isinstance(other, (int, Fraction, Polynomial)):
            return SPoly(self.nvars, [c * other for c in self.coeffs])
        if not isinstance(other, SPoly):
            return NotImplemented
        out = [Polynomial.zero(self.nvars)
               for _ in range(len(self.coeffs) + len(other.coeffs))]
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return SPoly(self.nvars, out)

    __rmul__ = __mul__

    def substitute(self, value: Scalar) -> Polynomial:
        """Evaluate the parameter at a rational number."""
        v = Fraction(value)
        total = Polynomial.zero(self.nvars)
        power = Fraction(1)
        for c in self.coeffs:
            total = total + c * power
            power *= v
        return total

    def substitute_sum(self) -> "SPoly2":
        """Substitute the parameter s by s + t, expanding binomially."""
        terms: dict[tuple[int, int], Polynomial] = {}
        for k, c in enumerate(self.coeffs):
            for j in range(k + 1):
                key = (j, k - j)
                piece = c * math.comb(k, j)
                terms[key] = terms.get(key, Polynomial.zero(self.nvars)) + piece
        return SPoly2(self.nvars, terms)

    def derivative(self) -> "SPoly":
        """Formal derivative with respect to the parameter."""
        return SPoly(self.nvars,
                     [c * k for k, c in enumerate(self.coeffs)][1:])

    def map_coeffs(self, fn) -> "SPoly":
        return SPoly(self.nvars, [fn(c) for c in self.coeffs])

    def __repr__(self):
        from .printing import format_spoly

        names = tuple(f"x{i}" for i in range(self.nvars))
        return f"<{format_spoly(self, names)}>"


class SPoly2:
    """Polynomial in two adjoined parameters; keys are (power of s, power of t)."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[tuple[int, int], Polynomial]):
        clean = {}
        for key, poly in terms.items():
            if poly.nvars != nvars:
                raise ValueError("coefficient has wrong variable count")
            if poly:
                clean[(int(key[0]), int(key[1]))] = poly
        self.nvars = nvars
        self.terms = clean

    def coefficient(self, i: int, j: int) -> Polynomial:
        return self.terms.get((i, j), Polynomial.zero(self.nvars))

    def map_coeffs(self, fn) -> "SPoly2":
        return SPoly2(self.nvars, {k: fn(p) for k, p in self.terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, SPoly2):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms


def monomials_up_to(nvars: int, max_degree: int) -> Iterator[Monomial]:
    """All exponent tuples of total degree at most ``max_degree``."""
    if max_degree < 0:
        return
    mono = [0] * nvars

    def rec(pos: int, budget: int):
        if pos == nvars:
            yield tuple(mono)
            return
        for e in range(budget + 1):
            mono[pos] = e
            yield from rec(pos + 1, budget - e)
        mono[pos] = 0

    yield from rec(0, max_degree)
