"""Command-line front end.

Every command takes a derivation file and reports plain text on stdout.
Exit codes encode the verdict: 0 for yes/success, 1 for a definite no,
2 when the bounded search was inconclusive, 64 for input errors.
"""

from __future__ import annotations

import argparse
import sys
from functools import reduce

from .cylinder import (
    Outcome,
    SearchBounds,
    cylinder_decision,
    dixmier_reduce,
    maximal_cylinder,
    plinth_claim_verify,
    plinth_membership,
    principality_check,
    slice_nonexistence,
)
from .derivation import CapExceededError, Derivation
from .groebner import Ideal, gcd_via_lcm, radical_membership
from .parsing import (
    DerivationSpec,
    ParseError,
    parse_fraction,
    parse_point,
    parse_polynomial,
    parse_polynomial_list,
    parse_spec,
    spec_derivation,
)
from .poly import DEGREVLEX, LEX
from .printing import (
    format_ideal,
    format_monomial,
    format_point,
    format_polynomial,
    format_ratfun,
    format_spoly,
)

EXIT_YES = 0
EXIT_NO = 1
EXIT_UNKNOWN = 2
EXIT_USAGE = 64

_EXIT_FOR_OUTCOME = {Outcome.YES: EXIT_YES, Outcome.NO: EXIT_NO,
                     Outcome.UNKNOWN: EXIT_UNKNOWN}


class UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _load(args) -> tuple[DerivationSpec, Derivation]:
    try:
        with open(args.spec, encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise UsageError(f"cannot read {args.spec}: {exc.strerror}") from exc
    spec = parse_spec(text)
    return spec, spec_derivation(spec)


def _require_preserved(derivation: Derivation, names):
    report = derivation.check_preserves_relations()
    if not report.ok:
        raise UsageError(
            "derivation does not preserve the relations: d("
            + format_polynomial(report.offender, names) + ") = "
            + format_polynomial(report.image, names))


def _bounds(args) -> SearchBounds:
    return SearchBounds(args.max_power, args.max_deg)


# ----------------------------------------------------------------------
# command handlers; each returns (exit code, report lines)


def _cmd_check(args):
    spec, derivation = _load(args)
    names = spec.variables
    lines = []
    report = derivation.check_preserves_relations()
    if not report.ok:
        lines.append("relations preserved: no")
        lines.append(f"offending relation: {format_polynomial(report.offender, names)}")
        lines.append(f"d({format_polynomial(report.offender, names)}) = "
                     f"{format_polynomial(report.image, names)}")
        return EXIT_NO, lines
    lines.append("relations preserved: yes")
    witness = derivation.nilpotency_witness(args.cap)
    for name, order in zip(names, witness.orders):
        if order is None:
            lines.append(f"order({name}) > {witness.cap}")
        else:
            lines.append(f"order({name}) = {order}")
    if witness.is_nilpotent:
        lines.append(f"locally nilpotent on generators: yes (cap {witness.cap})")
        return EXIT_YES, lines
    lines.append(f"locally nilpotent on generators: unknown (cap {witness.cap} exceeded)")
    return EXIT_UNKNOWN, lines


def _cmd_exp(args):
    spec, derivation = _load(args)
    names = spec.variables
    _require_preserved(derivation, names)
    lines = []
    for element in parse_polynomial_list(args.elem, names):
        action = derivation.exp_action(element)
        lines.append(f"exp(s*d)({format_polynomial(element, names)}) = "
                     f"{format_spoly(action, names)}")
    return EXIT_YES, lines


def _cmd_orbit(args):
    spec, derivation = _load(args)
    _require_preserved(derivation, spec.variables)
    point = parse_point(args.point)
    time = parse_fraction(args.time)
    moved = derivation.orbit_point(point, time)
    return EXIT_YES, [f"orbit{format_point(point)} at time {time} = "
                      f"{format_point(moved)}"]


def _cmd_fixed(args):
    spec, derivation = _load(args)
    _require_preserved(derivation, spec.variables)
    locus = derivation.fixed_locus()
    return EXIT_YES, [f"fixed locus: {format_ideal(locus.ideal, spec.variables)}"]


def _cmd_kernel(args):
    spec, derivation = _load(args)
    names = spec.variables
    _require_preserved(derivation, names)
    lines = []
    all_kernel = True
    for element in parse_polynomial_list(args.elem, names):
        image = derivation.apply(element)
        lines.append(f"d({format_polynomial(element, names)}) = "
                     f"{format_polynomial(image, names)}")
        all_kernel = all_kernel and image.is_zero
    lines.append("kernel member: " + ("yes" if all_kernel else "no"))
    return (EXIT_YES if all_kernel else EXIT_NO), lines


def _cmd_plinth(args):
    spec, derivation = _load(args)
    names = spec.variables
    _require_preserved(derivation, names)
    element = parse_polynomial(args.elem, names)
    bounds = _bounds(args)
    result = plinth_membership(derivation, element, bounds)
    h = format_polynomial(result.element, names)
    lines = []
    if result.outcome is Outcome.YES:
        cert = result.certificate
        lines.append(f"plinth membership of {h}: yes")
        lines.append(f"n = {cert.power}")
        lines.append(f"f = {format_polynomial(cert.preimage, names)}")
    elif result.outcome is Outcome.NO:
        lines.append(f"plinth membership of {h}: no")
        lines.append(f"d({h}) = {format_polynomial(result.obstruction, names)}")
    else:
        lines.append(f"plinth membership of {h}: unknown at bounds "
                     f"(max power {bounds.max_power}, max degree {bounds.max_degree})")
    return _EXIT_FOR_OUTCOME[result.outcome], lines


def _cylinder_lines(result, names):
    h = format_polynomial(result.element, names)
    lines = []
    if result.outcome is Outcome.YES:
        cert = result.certificate
        lines.append(f"cylinder D({h}): yes")
        lines.append(f"n = {cert.plinth.power}")
        lines.append(f"f = {format_polynomial(cert.plinth.preimage, names)}")
        lines.append(f"slice = {format_ratfun(cert.slice_value, names)}")
        for name, image in zip(names, cert.dixmier_images):
            lines.append(f"dixmier({name}) = {format_ratfun(image, names)}")
    elif result.outcome is Outcome.NO:
        lines.append(f"cylinder D({h}): no")
        lines.append(f"d({h}) = {format_polynomial(result.obstruction, names)}")
    else:
        lines.append(f"cylinder D({h}): unknown at bounds "
                     f"(max power {result.bounds.max_power}, "
                     f"max degree {result.bounds.max_degree})")
    return lines


def _cmd_cylinder(args):
    spec, derivation = _load(args)
    names = spec.variables
    _require_preserved(derivation, names)
    element = parse_polynomial(args.elem, names)
    result = cylinder_decision(derivation, element, _bounds(args))
    return _EXIT_FOR_OUTCOME[result.outcome], _cylinder_lines(result, names)


def _cmd_trivialize(args):
    spec, derivation = _load(args)
    names = spec.variables
    _require_preserved(derivation, names)
    localizer = parse_polynomial(args.h, names)
    element = parse_polynomial(args.elem, names)
    decision = cylinder_decision(derivation, localizer, _bounds(args))
    if decision.outcome is not Outcome.YES:
        return _EXIT_FOR_OUTCOME[decision.outcome], _cylinder_lines(decision, names)
    slice_value = decision.certificate.slice_value
    coefficients = dixmier_reduce(derivation, slice_value, element)
    lines = [f"slice = {format_ratfun(slice_value, names)}"]
    for k, c in enumerate(coefficients):
        lines.append(f"c{k} = {format_ratfun(c, names)}")
    return EXIT_YES, lines


def _cmd_slice_none(args):
    spec, derivation = _load(args)
    names = spec.variables
    _require_preserved(derivation, names)
    result = slice_nonexistence(derivation, args.max_deg)
    if result.found:
        return EXIT_YES, [f"slice found of degree <= {args.max_deg}",
                          f"slice = {format_polynomial(result.slice_poly, names)}"]
    cert = result.certificate
    multipliers = ", ".join(
        f"{format_monomial(mono, names)}: {value}"
        for mono, value in cert.nonzero_multipliers())
    lines = [
        f"no slice of degree <= {cert.degree_bound}",
        f"system: {cert.equations} equations, {cert.unknowns} unknowns",
        f"certificate multipliers: {{{multipliers}}}",
        f"certificate value: {cert.inconsistency.value}",
    ]
    return EXIT_NO, lines


def _claim_lines(report, names, bounds):
    lines = []
    for entry in report.entries:
        h = format_polynomial(entry.element, names)
        if entry.outcome is Outcome.YES:
            cert = entry.certificate
            lines.append(f"{h}: verified (n = {cert.power}, "
                         f"f = {format_polynomial(cert.preimage, names)})")
        elif entry.outcome is Outcome.NO:
            lines.append(f"{h}: rejected, d({h}) = "
                         f"{format_polynomial(entry.obstruction, names)}")
        else:
            lines.append(f"{h}: unknown at bounds (max power {bounds.max_power}, "
                         f"max degree {bounds.max_degree})")
    lines.append(f"claim verified: {report.outcome.value}")
    return lines


def _cmd_plinth_verify(args):
    spec, derivation = _load(args)
    names = spec.variables
    _require_preserved(derivation, names)
    generators = parse_polynomial_list(args.gens, names)
    bounds = _bounds(args)
    report = plinth_claim_verify(derivation, generators, bounds)
    lines = _claim_lines(report, names, bounds)
    if report.outcome is Outcome.YES:
        lines.append(f"complement ideal: {format_ideal(report.complement, names)}")
    return _EXIT_FOR_OUTCOME[report.outcome], lines


def _cmd_principal(args):
    spec, _ = _load(args)
    names = spec.variables
    generators = parse_polynomial_list(args.gens, names)
    result = principality_check(generators)
    lines = ["generators: "
             + "; ".join(format_polynomial(g, names) for g in generators)]
    lines.append(f"gcd = {format_polynomial(result.gcd, names)}")
    if result.is_principal:
        lines.append("principal: yes")
        lines.append(f"generator = {format_polynomial(result.generator, names)}")
        return EXIT_YES, lines
    lines.append("principal: no (gcd is not in the ideal)")
    return EXIT_NO, lines


def _cmd_maximal_cylinder(args):
    spec, derivation = _load(args)
    names = spec.variables
    _require_preserved(derivation, names)
    generators = parse_polynomial_list(args.gens, names)
    bounds = _bounds(args)
    report = maximal_cylinder(derivation, generators, bounds)
    lines = _claim_lines(report.claim, names, bounds)
    if report.claim.outcome is not Outcome.YES:
        return _EXIT_FOR_OUTCOME[report.claim.outcome], lines
    principality = report.principality
    lines.append(f"gcd = {format_polynomial(principality.gcd, names)}")
    if not principality.is_principal:
        lines.append("principal: no (gcd is not in the ideal)")
        lines.append("maximal principal cylinder: none")
        return EXIT_NO, lines
    lines.append(f"principal: yes, generator = "
                 f"{format_polynomial(principality.generator, names)}")
    decision = report.cylinder
    if decision.outcome is Outcome.YES:
        h = format_polynomial(decision.element, names)
        lines.append(f"maximal principal cylinder: D({h})")
        lines.extend(_cylinder_lines(decision, names)[1:])
    else:
        lines.extend(_cylinder_lines(decision, names))
    return _EXIT_FOR_OUTCOME[decision.outcome], lines


_ORDERS = {"degrevlex": DEGREVLEX, "lex": LEX}


def _cmd_gb(args):
    spec, _ = _load(args)
    names = spec.variables
    generators = parse_polynomial_list(args.ideal, names)
    ideal = Ideal(len(names), generators, _ORDERS[args.order])
    return EXIT_YES, [f"order: {args.order}",
                      f"basis: {format_ideal(ideal, names)}"]


def _cmd_member(args):
    spec, _ = _load(args)
    names = spec.variables
    element = parse_polynomial(args.elem, names)
    ideal = Ideal(len(names), parse_polynomial_list(args.ideal, names))
    residue = ideal.normal_form(element)
    lines = [f"normal form = {format_polynomial(residue, names)}"]
    if residue.is_zero:
        lines.append("member: yes")
        return EXIT_YES, lines
    lines.append("member: no")
    return EXIT_NO, lines


def _cmd_radmember(args):
    spec, _ = _load(args)
    names = spec.variables
    element = parse_polynomial(args.elem, names)
    ideal = Ideal(len(names), parse_polynomial_list(args.ideal, names))
    if radical_membership(element, ideal):
        return EXIT_YES, ["radical member: yes"]
    return EXIT_NO, ["radical member: no"]


def _cmd_gcd(args):
    spec, _ = _load(args)
    names = spec.variables
    polys = parse_polynomial_list(args.elems, names)
    if len(polys) < 2:
        raise UsageError("gcd needs at least two polynomials")
    result = reduce(gcd_via_lcm, polys)
    return EXIT_YES, [f"gcd = {format_polynomial(result, names)}"]


# ----------------------------------------------------------------------


def build_parser() -> _ArgumentParser:
    parser = _ArgumentParser(
        prog="lnd",
        description="Exact computations with locally nilpotent derivations: "
                    "actions, kernels, plinth membership, and cylinder "
                    "certificates.")
    commands = parser.add_subparsers(dest="command", required=True)

    def command(name, handler, help_text):
        sub = commands.add_parser(name, help=help_text)
        sub.add_argument("spec", help="derivation file")
        sub.set_defaults(handler=handler)
        return sub

    def add_bounds(sub):
        sub.add_argument("--max-power", type=int, default=4, dest="max_power",
                         help="largest power of the element to try (default 4)")
        sub.add_argument("--max-deg", type=int, default=8, dest="max_deg",
                         help="largest preimage degree to try (default 8)")

    sub = command("check", _cmd_check,
                  "verify the relations are preserved and the generators are nilpotent")
    sub.add_argument("--cap", type=int, default=64,
                     help="iteration cap for the nilpotency search (default 64)")

    sub = command("exp", _cmd_exp, "exponentiate the derivation on elements")
    sub.add_argument("--elem", required=True,
                     help="';'-separated polynomial expressions")

    sub = command("orbit", _cmd_orbit, "move a rational point along the action")
    sub.add_argument("--point", required=True,
                     help="';'-separated rational coordinates")
    sub.add_argument("--time", required=True, help="rational time value")

    command("fixed", _cmd_fixed, "ideal of the fixed locus of the action")

    sub = command("kernel", _cmd_kernel, "test kernel membership of elements")
    sub.add_argument("--elem", required=True,
                     help="';'-separated polynomial expressions")

    sub = command("plinth", _cmd_plinth,
                  "bounded search for a power of the element that is an image")
    sub.add_argument("--elem", required=True)
    add_bounds(sub)

    sub = command("cylinder", _cmd_cylinder,
                  "decide whether D(elem) is an invariant cylinder")
    sub.add_argument("--elem", required=True)
    add_bounds(sub)

    sub = command("trivialize", _cmd_trivialize,
                  "express an element in slice coordinates over D(h)")
    sub.add_argument("--h", required=True, help="localizing kernel element")
    sub.add_argument("--elem", required=True)
    add_bounds(sub)

    sub = command("slice-none", _cmd_slice_none,
                  "certify that no global slice of bounded degree exists")
    sub.add_argument("--max-deg", type=int, default=8, dest="max_deg",
                     help="largest slice degree to rule out (default 8)")

    sub = command("plinth-verify", _cmd_plinth_verify,
                  "verify a claimed plinth generating set")
    sub.add_argument("--gens", required=True,
                     help="';'-separated claimed generators")
    add_bounds(sub)

    sub = command("principal", _cmd_principal,
                  "test whether generators span a principal ideal (free ring)")
    sub.add_argument("--gens", required=True)

    sub = command("maximal-cylinder", _cmd_maximal_cylinder,
                  "certificate for the maximal principal invariant cylinder")
    sub.add_argument("--gens", required=True,
                     help="';'-separated verified plinth generators")
    add_bounds(sub)

    sub = command("gb", _cmd_gb, "reduced Groebner basis of an ideal")
    sub.add_argument("--ideal", required=True,
                     help="';'-separated generators")
    sub.add_argument("--order", choices=sorted(_ORDERS), default="degrevlex")

    sub = command("member", _cmd_member, "ideal membership via normal form")
    sub.add_argument("--elem", required=True)
    sub.add_argument("--ideal", required=True)

    sub = command("radmember", _cmd_radmember, "radical membership test")
    sub.add_argument("--elem", required=True)
    sub.add_argument("--ideal", required=True)

    sub = command("gcd", _cmd_gcd, "gcd of polynomials (free ring)")
    sub.add_argument("--elems", required=True,
                     help="';'-separated polynomials, at least two")

    return parser


def run_command(argv) -> tuple[int, str]:
    """Run one CLI invocation; returns the exit code and the report text."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        return EXIT_USAGE, f"error: {exc}"
    try:
        code, lines = args.handler(args)
    except (ParseError, UsageError, ValueError, ZeroDivisionError) as exc:
        return EXIT_USAGE, f"error: {exc}"
    except CapExceededError as exc:
        return EXIT_UNKNOWN, f"unknown at bounds: {exc}"
    return code, "\n".join(lines)


def main(argv=None) -> int:
    try:
        code, report = run_command(sys.argv[1:] if argv is None else argv)
    except SystemExit as exc:  # argparse --help
        return exc.code or 0
    if report:
        print(report, file=sys.stderr if code == EXIT_USAGE else sys.stdout)
    return code


if __name__ == "__main__":
    sys.exit(main())
