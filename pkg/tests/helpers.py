"""Shared builders, random generators, and independent oracles.

The oracles here deliberately avoid the code paths they are used to
check: membership is decided by solving a linear system over monomial
coefficients, Groebner bases are verified through the S-pair criterion
on the finished basis, and radical membership is cross-checked by
searching small powers directly.
"""

from fractions import Fraction

from lndtools import (
    DEGREVLEX,
    Derivation,
    Ideal,
    Inconsistency,
    Polynomial,
    QMatrix,
    RingPresentation,
    monomials_up_to,
    parse_polynomial,
    solve_exact,
)

# ----------------------------------------------------------------------
# the four standard derivations


def triangular3():
    names = ["x", "y", "z"]
    ring = RingPresentation.free(names)
    images = [parse_polynomial(e, names) for e in ("y", "z", "0")]
    return Derivation(ring, images), names


def danielewski():
    names = ["x", "y", "z"]
    relation = parse_polynomial("y^2 - 2*x*z - 1", names)
    ring = RingPresentation(names, Ideal(3, [relation]))
    images = [parse_polynomial(e, names) for e in ("y", "z", "0")]
    return Derivation(ring, images), names


def translation4():
    names = ["x", "y", "u", "v"]
    ring = RingPresentation.free(names)
    images = [parse_polynomial(e, names) for e in ("u", "v", "0", "0")]
    return Derivation(ring, images), names


def plane():
    names = ["x", "y"]
    ring = RingPresentation.free(names)
    images = [parse_polynomial(e, names) for e in ("y^2", "0")]
    return Derivation(ring, images), names


ALL_DERIVATIONS = (triangular3, danielewski, translation4, plane)


# ----------------------------------------------------------------------
# random data


def random_fraction(rng, bound=6):
    num = rng.randint(-bound, bound)
    den = rng.randint(1, bound)
    return Fraction(num, den)


def random_monomial(rng, nvars, max_total=3):
    exps = [0] * nvars
    for _ in range(rng.randint(0, max_total)):
        exps[rng.randrange(nvars)] += 1
    return tuple(exps)


def random_poly(rng, nvars, max_total=3, max_terms=4, bound=6):
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        coeff = random_fraction(rng, bound)
        if coeff:
            terms[random_monomial(rng, nvars, max_total)] = coeff
    return Polynomial(nvars, terms)


def random_nonzero_poly(rng, nvars, max_total=3, max_terms=4, bound=6):
    while True:
        f = random_poly(rng, nvars, max_total, max_terms, bound)
        if f:
            return f


# ----------------------------------------------------------------------
# oracles


def membership_by_linear_algebra(f, generators, cofactor_degree):
    """Decide f in (generators) with cofactors of bounded degree by
    exact linear algebra over monomial coefficients.

    Complete against a reduced degree-compatible basis once the bound
    reaches deg f: the division algorithm never needs a cofactor of
    larger degree there.  Against arbitrary generators only a positive
    answer is conclusive.
    """
    nvars = f.nvars
    unknowns = []
    for g in generators:
        for mono in monomials_up_to(nvars, cofactor_degree):
            unknowns.append((g, mono))
    rows = set(f.terms)
    for g, mono in unknowns:
        for gmono in g.terms:
            rows.add(tuple(a + b for a, b in zip(mono, gmono)))
    rows = sorted(rows)
    row_index = {mono: i for i, mono in enumerate(rows)}
    entries = [[Fraction(0)] * len(unknowns) for _ in rows]
    for col, (g, mono) in enumerate(unknowns):
        for gmono, coeff in g.terms.items():
            prod = tuple(a + b for a, b in zip(mono, gmono))
            entries[row_index[prod]][col] += coeff
    rhs = [f.coefficient(mono) for mono in rows]
    outcome = solve_exact(QMatrix(entries), rhs)
    return not isinstance(outcome, Inconsistency)


def is_groebner_basis(basis, order):
    """S-pair criterion on a finished basis: every S-polynomial must
    reduce to zero against the basis itself."""
    from lndtools import reduce_poly

    basis = list(basis)
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            f, g = basis[i], basis[j]
            lf = f.leading_monomial(order)
            lg = g.leading_monomial(order)
            lcm = tuple(max(a, b) for a, b in zip(lf, lg))
            sf = Polynomial.monomial(
                f.nvars, tuple(a - b for a, b in zip(lcm, lf)),
                1 / f.leading_term(order)[1])
            sg = Polynomial.monomial(
                g.nvars, tuple(a - b for a, b in zip(lcm, lg)),
                1 / g.leading_term(order)[1])
            spair = sf * f - sg * g
            if reduce_poly(spair, basis, order):
                return False
    return True


def radical_by_power_search(f, ideal, max_power=5):
    """f^n in the ideal for some n up to max_power; positive answers
    certify radical membership, negative ones are only bounded."""
    power = Polynomial.constant(f.nvars, 1)
    for _ in range(max_power):
        power = power * f
        if ideal.contains(power):
            return True
    return False
