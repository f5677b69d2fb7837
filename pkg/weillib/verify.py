"""Named verification suites.

Each suite reruns one family of identities against brute-force oracles on
small fields. Suites have built-in default fields and parameters; values
passed in `overrides` (p, e, u, a, b, f, g, j, smax) replace them.
"""
from __future__ import absolute_import, division, print_function

import collections
import logging
import math
from fractions import Fraction

import numpy as np

from . import lpoly, params, seqcorr, symfun
from .charsum import (additive_character, g_sum, multiplicative_character,
                      quadratic_character)
from .gf.field import FieldSpec, parse_element
from .gf.poly import coerce_poly, parse_poly
from .reports import SuiteResult, exact_verdict, verdict

SUITES = collections.OrderedDict()
ALIASES = collections.OrderedDict()


def suite(name, alias=None):
    """Register a suite function under its identifier, and optionally a
    descriptive alias."""
    def decorator(func):
        SUITES[name] = func
        if alias:
            ALIASES[alias] = name
        return func
    return decorator


def _prefix_matches(name, keys):
    exact = [key for key in keys if key.split("-")[0] == name]
    if exact:
        return exact
    return [key for key in keys if key.startswith(name)]


def resolve_names(names):
    """Expand "all", aliases and short prefixes ("prop41", "auto") to suite
    identifiers."""
    resolved = []
    for name in names:
        if name == "all":
            matches = list(SUITES)
        elif name in SUITES:
            matches = [name]
        elif name in ALIASES:
            matches = [ALIASES[name]]
        else:
            matches = _prefix_matches(name, SUITES)
            if not matches:
                matches = [ALIASES[key]
                           for key in _prefix_matches(name, ALIASES)]
            if len(matches) != 1:
                raise ValueError("Unknown or ambiguous suite %r; choose from "
                                 "%s" % (name, ", ".join(SUITES)))
        for key in matches:
            if key not in resolved:
                resolved.append(key)
    return resolved


def run_suite(name, overrides=None, bound=None, processes=1,
              tol=params.MODULUS_TOL):
    logging.info("Running suite %s", name)
    result = SUITES[name](dict(overrides or {}), bound, processes, tol)
    logging.info("Suite %s: %s", name, "pass" if result.passed else "FAIL")
    return result


# __________________________________________________________________________
# Helpers for overrides

def _fields(opts, defaults):
    """Fields to run on: the override (p, e) or the suite defaults."""
    if opts.get("p") is not None:
        return [FieldSpec(opts["p"], opts.get("e") or 1)]
    return [FieldSpec(p, e) for p, e in defaults]


def _element(field, value):
    """Field element from an override: text in the command-line element
    syntax, or anything `FieldSpec.element` accepts."""
    if isinstance(value, str):
        return parse_element(field, value)
    return field.element(value)


def _pairs(field, opts, default=None):
    """(a, b) pairs: overrides, else `default`, else all nonzero pairs."""
    if opts.get("a") is not None or opts.get("b") is not None:
        return [(_element(field, opts.get("a") or 1),
                 _element(field, opts.get("b") or 1))]
    if default is not None:
        return [(field.element(a), field.element(b)) for a, b in default]
    nonzero = list(field.nonzero_elements())
    return [(a, b) for a in nonzero for b in nonzero]


def _exponents(field, opts, default):
    if opts.get("u") is not None:
        return [opts["u"]]
    return default(field) if callable(default) else list(default)


def _poly(field, opts, key, default):
    value = opts.get(key)
    if value is None:
        return coerce_poly(field, default)
    if isinstance(value, str):
        return parse_poly(field, value)
    return coerce_poly(field, value)


# __________________________________________________________________________
# Sums over extensions and their recursions

@suite("thm11-recursion", "weil-recursion")
def weil_recursion(opts, bound, processes, tol):
    """S_s(x^3 + x) over GF(5): predict from S_1, S_2 up to s = 6."""
    top = SuiteResult("thm11-recursion")
    for field in _fields(opts, [(5, 1)]):
        chi = additive_character(field)
        f = _poly(field, opts, "f", [0, 1, 0, 1])
        case = lpoly.weil_suite(chi, f, opts.get("smax") or 6, bound,
                                processes, tol)
        top.extend(case, "q%d" % field.q)
    return top


@suite("thm12-recursion", "mult-recursion")
def mult_recursion(opts, bound, processes, tol):
    """T_s(x(x-1)) with the quadratic character of GF(5): one root, T_s = -1."""
    top = SuiteResult("thm12-recursion")
    for field in _fields(opts, [(5, 1)]):
        if opts.get("j") is not None:
            psi = multiplicative_character(field, opts["j"])
        else:
            psi = quadratic_character(field)
        f = _poly(field, opts, "f", [0, -1, 1])
        case = lpoly.mult_suite(psi, f, opts.get("smax") or 3, bound,
                                processes, tol)
        top.extend(case, "q%d" % field.q)
    return top


@suite("thm31-pipeline", "gsum-pipeline")
def gsum_pipeline(opts, bound, processes, tol):
    """G_3(1, 1) over GF(5): L by enumeration against brute-force sums,
    the vanishing degree-5 sum, predictions to s = 6, and the sums again
    from irreducible polynomials alone."""
    top = SuiteResult("thm31-pipeline")
    for field in _fields(opts, [(5, 1)]):
        chi = additive_character(field)
        for u in _exponents(field, opts, [3]):
            for a, b in _pairs(field, opts, [(1, 1)]):
                case = lpoly.gsum_suite(field, u, a, b,
                                        opts.get("smax") or 6, chi, bound,
                                        processes, tol)
                brute = case.results["brute_force"]
                for s in range(1, min(3, len(brute)) + 1):
                    case.check(exact_verdict(
                        "irreducible-s%d" % s, brute[s - 1],
                        lpoly.lambda_power_sum(s, u, a, b, chi)))
                top.extend(case, "q%d-%s" % (field.q, case.name))
    return top


@suite("cor37-kloosterman", "kloosterman")
def kloosterman(opts, bound, processes, tol):
    """Kloosterman sums: brute force, three-term recursion and Dickson form."""
    top = SuiteResult("cor37-kloosterman")
    for field in _fields(opts, [(2, 1), (3, 1), (7, 1)]):
        chi = additive_character(field)
        for a, b in _pairs(field, opts, None if field.q <= 3 else [(1, 1)]):
            case = lpoly.kloosterman_suite(field, a, b,
                                           opts.get("smax") or 5, chi,
                                           bound, processes, tol)
            top.extend(case, "q%d-%s" % (field.q, case.name))
    return top


def _u2_case(field, a, b, chi, smax, bound, processes, tol):
    """L for u = 2 by enumeration vs closed form, predictions from G^(1)
    through the enumerated L, and the root moduli."""
    case = SuiteResult("a%d-b%d" % (a.code, b.code))
    enumerated = lpoly.build_L(2, a, b, chi, bound=bound)
    closed = lpoly.closed_form_u2(field, a, b, chi)
    case.add("L", enumerated.coeffs)
    case.check(exact_verdict("closed-form", [closed[j] for j in range(4)],
                             [enumerated[j] for j in range(4)]))
    brute = [g_sum(2, a, b, chi, s, bound, processes)
             for s in range(1, smax + 1)]
    predicted = lpoly.predict_sums(enumerated.elementary().values, brute[:1],
                                   smax)
    case.add("brute_force", brute)
    case.check(exact_verdict("recursion", brute, predicted.values))
    report = lpoly.roots_and_bound(closed, math.sqrt(field.q), tol)
    case.add("roots", report.roots.roots)
    case.check(verdict("roots-on-circle", report.all_on_circle, tol,
                       moduli=[abs(w) for w in report.roots.roots],
                       expected=report.expected))
    return case, enumerated


@suite("prop38-even", "quadratic-even")
def quadratic_even(opts, bound, processes, tol):
    """u = 2 over GF(8): L = 1 + G_2 z + 8 z^2 for every (a, b)."""
    top = SuiteResult("prop38-even")
    for field in _fields(opts, [(2, 3)]):
        if field.p != 2:
            raise ValueError("prop38-even needs a binary field")
        chi = additive_character(field)
        for a, b in _pairs(field, opts):
            case, enumerated = _u2_case(field, a, b, chi,
                                        opts.get("smax") or 4, bound,
                                        processes, tol)
            expected = [1, g_sum(2, a, b, chi, 1), field.q, 0]
            case.check(exact_verdict("coefficients", expected,
                                     [enumerated[j] for j in range(4)]))
            top.extend(case, "q%d-%s" % (field.q, case.name))
    return top


@suite("prop39-odd", "quadratic-odd")
def quadratic_odd(opts, bound, processes, tol):
    """u = 2 over GF(7): the cubic L from Gauss sums for two (a, b) pairs."""
    top = SuiteResult("prop39-odd")
    for field in _fields(opts, [(7, 1)]):
        if field.p == 2:
            raise ValueError("prop39-odd needs odd characteristic")
        chi = additive_character(field)
        for a, b in _pairs(field, opts, [(1, 1), (3, 2)]):
            case, _enumerated = _u2_case(field, a, b, chi,
                                         opts.get("smax") or 3, bound,
                                         processes, tol)
            top.extend(case, "q%d-%s" % (field.q, case.name))
    return top


def _bound_exponents(field):
    return [u for u in (2, 3)
            if math.gcd(u, field.q) == 1 and math.gcd(u + 1, field.q) == 1]


@suite("cor33-bound", "gsum-bound")
def gsum_bound(opts, bound, processes, tol):
    """|G_u^(s)(a, b)| <= (u+1) q^(s/2) for every nonzero (a, b), s <= 3."""
    top = SuiteResult("cor33-bound")
    smax = opts.get("smax") or 3
    for field in _fields(opts, [(5, 1), (7, 1), (2, 3)]):
        chi = additive_character(field)
        for u in _exponents(field, opts, _bound_exponents):
            worst = 0.0
            failures = []
            measured = []
            for a, b in _pairs(field, opts):
                asserted = lpoly.has_root_bound(field, u, b)
                for s in range(1, smax + 1):
                    value = abs(g_sum(u, a, b, chi, s, bound, processes))
                    if not asserted:
                        measured.append((a.code, b.code, s, value))
                        continue
                    ratio = value / ((u + 1) * field.q ** (s / 2))
                    worst = max(worst, ratio)
                    if value > (u + 1) * field.q ** (s / 2) + tol:
                        failures.append((a.code, b.code, s, value))
            if measured:
                top.add("q%d-u%d-measured" % (field.q, u), measured)
            top.check(verdict("q%d-u%d" % (field.q, u), not failures, tol,
                              worst_ratio=worst, failures=failures))
    return top


# __________________________________________________________________________
# Sequences

def _binary_fields(opts, defaults):
    fields = _fields(opts, defaults)
    for field in fields:
        if field.p != 2:
            raise ValueError("Sequence suites need p = 2; got %s" % field)
    return fields


@suite("prop41-spectrum", "autocorrelation")
def autocorrelation(opts, bound, processes, tol):
    top = SuiteResult("prop41-spectrum")
    for field in _binary_fields(opts, [(2, 2), (2, 3), (2, 4)]):
        for u in _exponents(field, opts, seqcorr.valid_exponents):
            top.extend(seqcorr.spectrum_suite(field, u))
    return top


@suite("cor42-cross", "cross-correlation")
def cross_correlation(opts, bound, processes, tol):
    top = SuiteResult("cor42-cross")
    for field in _binary_fields(opts, [(2, 2), (2, 3)]):
        for u in _exponents(field, opts, seqcorr.valid_exponents):
            top.extend(seqcorr.cross_suite(field, u))
    return top


@suite("prop43-convolution", "convolution")
def convolution(opts, bound, processes, tol):
    top = SuiteResult("prop43-convolution")
    for field in _binary_fields(opts, [(2, 2), (2, 3)]):
        for u in _exponents(field, opts, seqcorr.valid_exponents):
            top.extend(seqcorr.convolution_suite(field, u))
    return top


# __________________________________________________________________________
# Generalized sums, symmetric functions, lambda

@suite("thm44-generalized", "generalized-recursion")
def generalized_recursion(opts, bound, processes, tol):
    """G^(s)(x^3 + x, x^3) over GF(5): six roots, predict s = 7."""
    top = SuiteResult("thm44-generalized")
    for field in _fields(opts, [(5, 1)]):
        chi = additive_character(field)
        f = _poly(field, opts, "f", [0, 1, 0, 1])
        g = _poly(field, opts, "g", [0, 0, 0, 1])
        case = lpoly.generalized_suite(f, g, chi, opts.get("smax") or 7,
                                       bound, processes, tol)
        top.extend(case, "q%d" % field.q)
    return top


def _random_fractions(rng, count):
    return [Fraction(int(rng.integers(-9, 10)), int(rng.integers(1, 5)))
            for _i in range(count)]


@suite("symfun-properties")
def symfun_properties(opts, bound, processes, tol):
    """Newton round trips, determinant forms, and four agreeing evaluations
    of Dickson polynomials, on seeded random rational inputs."""
    rng = np.random.default_rng(20240)
    top = SuiteResult("symfun-properties")
    round_trip = determinant = 0
    for trial in range(100):
        m = int(rng.integers(1, 9))
        elem = symfun.SymCoeffs(symfun.ELEMENTARY, _random_fractions(rng, m))
        power = symfun.newton_p_from_e(elem, m)
        back = symfun.newton_e_from_p(power)
        round_trip += back.values != elem.values
        if m <= 6:
            determinant += (symfun.det_cross_check(elem).values
                            != power.values)
            determinant += (symfun.det_cross_check(power).values
                            != back.values)
    top.check(verdict("newton-round-trip", not round_trip, None,
                      trials=100, failures=round_trip))
    top.check(verdict("determinants", not determinant, None,
                      failures=determinant))
    dickson = 0
    cases = 0
    for k in range(1, 4):
        xs = [Fraction(int(v)) for v in rng.integers(-5, 6, size=k)]
        a = Fraction(int(rng.integers(-5, 6)))
        lifted_from = symfun.root_polynomial(xs, a)
        series = symfun.dickson_d1_series(symfun.DicksonInput(k, xs, a, 0), 10)
        for n in range(1, 11):
            inp = symfun.DicksonInput(k, xs, a, n)
            values = [symfun.dickson_d1_recurrence(inp),
                      symfun.dickson_d1_waring(inp),
                      series[n],
                      symfun.lifted_dickson_coeffs(
                          symfun.lift_roots_power(lifted_from, n))[0]]
            cases += 1
            dickson += any(v != values[0] for v in values[1:])
            symbolic = [symfun.dickson_symbolic(k, n, method)
                        for method in ("recurrence", "waring", "series")]
            dickson += any(v != symbolic[0] for v in symbolic[1:])
    top.check(verdict("dickson", not dickson, None, cases=cases,
                      failures=dickson))
    return top


@suite("lambda-multiplicativity")
def lambda_multiplicativity(opts, bound, processes, tol):
    top = SuiteResult("lambda-multiplicativity")
    for field in _fields(opts, [(3, 1), (5, 1)]):
        for u in _exponents(field, opts, [1, 2]):
            a = _element(field, opts.get("a") or 1)
            b = _element(field, opts.get("b") or 1)
            top.extend(lpoly.lambda_multiplicativity(field, u, a, b))
    return top
