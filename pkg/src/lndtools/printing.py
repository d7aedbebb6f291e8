"""Canonical text form for every value the package prints.

Terms are listed by descending monomial order, coefficients as reduced
fractions, so equal values always print identically and printed
polynomials re-parse to themselves.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .poly import DEGREVLEX, Monomial, MonomialOrder, Polynomial, SPoly


def _term_body(coeff_abs: Fraction, mono: Monomial, names: Sequence[str],
               parameter_part: str | None = None) -> str:
    factors = []
    if coeff_abs != 1:
        factors.append(str(coeff_abs))
    if parameter_part:
        factors.append(parameter_part)
    for name, e in zip(names, mono):
        if e == 1:
            factors.append(name)
        elif e > 1:
            factors.append(f"{name}^{e}")
    if not factors:
        return "1"
    return "*".join(factors)


def format_monomial(mono: Monomial, names: Sequence[str]) -> str:
    return _term_body(Fraction(1), mono, names)


def format_polynomial(poly: Polynomial, names: Sequence[str],
                      order: MonomialOrder = DEGREVLEX) -> str:
    if poly.is_zero:
        return "0"
    pieces = []
    for mono in sorted(poly.terms, key=order.key, reverse=True):
        coeff = poly.terms[mono]
        body = _term_body(abs(coeff), mono, names)
        if not pieces:
            pieces.append(body if coeff > 0 else "-" + body)
        else:
            pieces.append((" + " if coeff > 0 else " - ") + body)
    return "".join(pieces)


def format_spoly(value: SPoly, names: Sequence[str],
                 order: MonomialOrder = DEGREVLEX, parameter: str = "s") -> str:
    if value.is_zero:
        return "0"
    pieces = []
    for k, c in enumerate(value.coeffs):
        if c.is_zero:
            continue
        ppart = None if k == 0 else (parameter if k == 1 else f"{parameter}^{k}")
        if len(c.terms) == 1:
            ((mono, coeff),) = c.terms.items()
            body = _term_body(abs(coeff), mono, names, ppart)
            negative = coeff < 0
        else:
            inner = format_polynomial(c, names, order)
            body = f"{ppart}*({inner})" if ppart else inner
            negative = False
        if not pieces:
            pieces.append("-" + body if negative else body)
        else:
            pieces.append((" - " if negative else " + ") + body)
    return "".join(pieces)


def _wrap_side(text: str) -> str:
    if " " in text or "*" in text or "/" in text or text.startswith("-"):
        return f"({text})"
    return text


def format_ratfun(value, names: Sequence[str],
                  order: MonomialOrder = DEGREVLEX) -> str:
    num = format_polynomial(value.num, names, order)
    if value.is_polynomial:
        return num
    den = format_polynomial(value.den, names, order)
    return f"{_wrap_side(num)}/{_wrap_side(den)}"


def format_ideal(ideal, names: Sequence[str]) -> str:
    if not ideal.basis:
        return "(0)"
    inner = ", ".join(format_polynomial(g, names, ideal.order)
                      for g in ideal.basis)
    return f"({inner})"


def format_point(values: Sequence) -> str:
    return "(" + ", ".join(str(Fraction(v)) for v in values) + ")"
