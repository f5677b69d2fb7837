"""Command-line interface and corresponding API for WeilKit."""
# NB: argparse CLI definitions and API functions are interwoven:
#   "_cmd_*" handles I/O and arguments processing for the command
#   "do_*" runs the command's functionality as an API, returning a RunReport
from __future__ import absolute_import, division, print_function

import argparse
import logging
import math
import sys
import time

import pandas as pd

from . import export, lpoly, params, seqcorr, symfun, verify
from .charsum import (additive_character, multiplicative_character,
                      quadratic_character, sum_series)
from .gf.field import FieldSpec, absolute_trace, parse_element
from .gf.poly import MonicPoly, parse_poly
from .gf.tables import generator_dlog
from .gf.tower import build_tower
from .reports import RunReport, exact_verdict, verdict
from ._version import __version__


__all__ = []
def public(fn):
    __all__.append(fn.__name__)
    return fn


AP = argparse.ArgumentParser(
        description="WeilKit, exact character sums and L-polynomials over "
                    "finite fields.")
AP_subparsers = AP.add_subparsers(
        help="Sub-commands (use with -h for more info)")

# Options shared by the reporting commands
P_common = argparse.ArgumentParser(add_help=False)
P_common.add_argument('--format', choices=('json', 'csv', 'text'),
        default='json',
        help="Output format. [Default: %(default)s]")
P_common.add_argument('-o', '--output', metavar='FILENAME',
        help="Output file name. [Default: standard output]")
P_common.add_argument('--tol', type=float, default=params.MODULUS_TOL,
        help="""Tolerance for checks on complex magnitudes.
                [Default: %(default)g]""")
P_common.add_argument('--enum-bound', type=int,
        help="""Largest field size to enumerate. [Default: the %s
                environment variable, or %d]"""
                % (params.ENUM_BOUND_ENV, params.ENUM_BOUND))
P_common.add_argument('-j', '--processes', type=int, default=1,
        help="""Number of worker processes for enumeration sweeps; 0 means
                all available CPUs. [Default: %(default)s]""")
P_common.add_argument('--timing', action='store_true',
        help="""Include the wall-clock duration in the report; without it,
                reports are byte-identical across runs.""")

P_field_opts = argparse.ArgumentParser(add_help=False)
P_field_opts.add_argument('--p', type=int,
        help="Characteristic of the base field F_q.")
P_field_opts.add_argument('--e', type=int,
        help="Extension degree of F_q over GF(p), so q = p^e. [Default: 1]")

P_sum_opts = argparse.ArgumentParser(add_help=False)
P_sum_opts.add_argument('--u', type=int,
        help="Exponent u of G_u(a, b).")
P_sum_opts.add_argument('--a', metavar='ELEMENT',
        help="""Parameter a: an element code, or colon-separated ascending
                coefficients (0:1 is x). [Default: 1]""")
P_sum_opts.add_argument('--b', metavar='ELEMENT',
        help="Parameter b, in the same syntax. [Default: 1]")
P_sum_opts.add_argument('--f', metavar='POLY',
        help="""Polynomial f as comma-separated ascending coefficients
                (0,1,0,1 is x^3 + x).""")
P_sum_opts.add_argument('--g', metavar='POLY',
        help="Second polynomial g (generalized sums), same syntax.")
P_sum_opts.add_argument('--j', type=int,
        help="""Exponent j of the multiplicative character
                psi_j(g^k) = zeta_(q-1)^(jk). [Default: the quadratic
                character for odd q, else 1]""")
P_sum_opts.add_argument('--twist', metavar='ELEMENT',
        help="Twist t of the additive character chi_t. [Default: 1]")
P_sum_opts.add_argument('--s', '--smax', dest='smax', type=int, default=3,
        help="Largest extension degree s. [Default: %(default)s]")


def _field(args, p=None, e=1):
    """FieldSpec from --p/--e, falling back to the given defaults."""
    p = args.p if args.p is not None else p
    if p is None:
        raise ValueError("The characteristic --p is required")
    return FieldSpec(p, args.e if args.e is not None else e)


def _element(field, text, default=1):
    if text is None:
        return field.element(default)
    return parse_element(field, text)


def _poly(field, text, name):
    if text is None:
        raise ValueError("Polynomial --%s is required" % name)
    return parse_poly(field, text)


def _additive(field, args):
    return additive_character(field, _element(field, args.twist))


def _multiplicative(field, args):
    if args.j is not None:
        return multiplicative_character(field, args.j)
    if field.p == 2:
        return multiplicative_character(field, 1)
    return quadratic_character(field)


def _new_report(command, args, field=None, **parameters):
    parameters = {key: value for key, value in parameters.items()
                  if value is not None}
    parameters["tol"] = args.tol
    return RunReport(command, field.to_dict() if field else None, parameters)


# _____________________________________________________________________________
# Finite fields

# field -----------------------------------------------------------------------

def _cmd_field(args):
    """Describe GF(p^e): canonical modulus, generator and element table."""
    field = _field(args)
    report = _new_report("field", args, field, s=args.tower)
    return do_field(field, args.tower, report)


@public
def do_field(field, s=None, report=None):
    """Canonical description of a field, and optionally of a tower."""
    report = report or RunReport("field", field.to_dict())
    prime = FieldSpec(field.p)
    report.add("q", field.q)
    report.add("modulus", str(MonicPoly(prime, field.modulus)))
    logs = generator_dlog(field)
    report.add("generator", logs.generator)
    if field.q <= params.FIELD_TABLE_MAX:
        rows = []
        for c in field.elements():
            rows.append({"code": c.code, "element": ":".join(map(str, c.coeffs)),
                         "dlog": logs.dlog(c) if c else "",
                         "trace": absolute_trace(c)})
        report.add("table", pd.DataFrame(rows, columns=["code", "element",
                                                        "dlog", "trace"]))
    if s:
        ctx = build_tower(field, s)
        report.add("tower", {"big": ctx.big.to_dict(),
                             "base_image": ctx.base_image})
        value = ctx.big.zero
        for c in reversed(field.modulus):
            value = value * ctx.base_image + c
        report.check(verdict("base-image-is-root", value.is_zero()))
    return report


P_field = AP_subparsers.add_parser('field', help=_cmd_field.__doc__,
                                   parents=[P_common, P_field_opts])
P_field.add_argument('--s', dest='tower', type=int,
        help="Also build the tower F_{q^s} and report the base embedding.")
P_field.set_defaults(func=_cmd_field)


# _____________________________________________________________________________
# Character sums

# sum -------------------------------------------------------------------------

def _cmd_sum(args):
    """Character sums S_s(f), T_s(f), G_u^(s)(a, b) or G^(s)(f, g)."""
    field = _field(args)
    kind = args.kind
    report = _new_report("sum", args, field, kind=kind, smax=args.smax,
                         u=args.u, a=args.a, b=args.b, f=args.f, g=args.g,
                         j=args.j, twist=args.twist)
    if kind == "T":
        chi = _multiplicative(field, args)
    else:
        chi = _additive(field, args)
    options = {}
    if kind in ("S", "T", "GEN"):
        options["f"] = _poly(field, args.f, "f")
    if kind == "GEN":
        options["g"] = _poly(field, args.g, "g")
    if kind == "G":
        if args.u is None:
            raise ValueError("Sum kind G needs --u")
        options.update(u=args.u, a=_element(field, args.a),
                       b=_element(field, args.b))
    return do_sum(kind, chi, args.smax, report, args.enum_bound,
                  args.processes, **options)


@public
def do_sum(kind, chi, smax, report=None, bound=None, processes=1, **options):
    report = report or RunReport("sum", chi.field.to_dict())
    series = sum_series(kind, chi, smax, bound, processes, **options)
    report.add("character", chi)
    report.add("series", series)
    report.add("table", series.to_dataframe())
    return report


P_sum = AP_subparsers.add_parser('sum', help=_cmd_sum.__doc__,
                                 parents=[P_common, P_field_opts, P_sum_opts])
P_sum.add_argument('kind', choices=('S', 'T', 'G', 'GEN'),
        help="""Which sum: S (additive, f), T (multiplicative, f),
                G (G_u(a, b)) or GEN (f(c) + g(1/c)).""")
P_sum.set_defaults(func=_cmd_sum)


# kloosterman -----------------------------------------------------------------

def _cmd_kloosterman(args):
    """Kloosterman sums by brute force, recursion and Dickson polynomials."""
    field = _field(args)
    a, b = _element(field, args.a), _element(field, args.b)
    report = _new_report("kloosterman", args, field, a=a.code, b=b.code,
                         smax=args.smax)
    return do_kloosterman(field, a, b, args.smax, report, args.enum_bound,
                          args.processes, args.tol)


@public
def do_kloosterman(field, a, b, smax, report=None, bound=None, processes=1,
                   tol=params.MODULUS_TOL):
    report = report or RunReport("kloosterman", field.to_dict())
    chi = additive_character(field)
    case = lpoly.kloosterman_suite(field, a, b, smax, chi, bound, processes,
                                   tol)
    report.add("values", case.results["values"])
    report.add("roots", case.results["roots"])
    for item in case.verdicts:
        report.check(item)
    return report


P_kloosterman = AP_subparsers.add_parser('kloosterman',
        help=_cmd_kloosterman.__doc__,
        parents=[P_common, P_field_opts, P_sum_opts])
P_kloosterman.set_defaults(func=_cmd_kloosterman)


# _____________________________________________________________________________
# L-polynomials

# lpoly -----------------------------------------------------------------------

def _cmd_lpoly(args):
    """Build L(z) for G_u(a, b) by enumeration, with closed forms and roots."""
    field = _field(args)
    u = args.u if args.u is not None else 1
    a, b = _element(field, args.a), _element(field, args.b)
    report = _new_report("lpoly", args, field, u=u, a=a.code, b=b.code)
    return do_lpoly(field, u, a, b, _additive(field, args), report,
                    args.enum_bound, args.tol)


@public
def do_lpoly(field, u, a, b, chi, report=None, bound=None,
             tol=params.MODULUS_TOL):
    report = report or RunReport("lpoly", field.to_dict())
    lpol = lpoly.build_L(u, a, b, chi, verify=True, bound=bound)
    report.add("L", lpol)
    report.check(exact_verdict("tail", 0, lpol.context["tail"]))
    if u in (1, 2) and not b.is_zero():
        if u == 2:
            closed = lpoly.closed_form_u2(field, a, b, chi)
        else:
            closed = lpoly.LPolynomial([1, lpol[1], field.q])
        report.add("closed_form", closed)
        report.check(verdict("closed-form", closed == lpol))
    bounds = lpoly.roots_and_bound(lpol, math.sqrt(field.q), tol)
    report.add("roots", bounds.roots.roots)
    report.add("max_modulus", bounds.max_modulus)
    report.add("all_on_circle", bounds.all_on_circle)
    if lpoly.has_root_bound(field, u, b):
        for item in lpoly.bound_verdicts("roots", bounds):
            report.check(item)
    return report


P_lpoly = AP_subparsers.add_parser('lpoly', help=_cmd_lpoly.__doc__,
        parents=[P_common, P_field_opts, P_sum_opts])
P_lpoly.set_defaults(func=_cmd_lpoly)


# predict ---------------------------------------------------------------------

def _cmd_predict(args):
    """Recover the inverse roots from the first sums and predict the rest."""
    field = _field(args)
    kind = args.kind
    report = _new_report("predict", args, field, kind=kind, smax=args.smax,
                         u=args.u, a=args.a, b=args.b, f=args.f, g=args.g,
                         j=args.j)
    if kind == "S":
        f = _poly(field, args.f, "f")
        case = lpoly.weil_suite(_additive(field, args), f, args.smax,
                                args.enum_bound, args.processes, args.tol)
    elif kind == "T":
        f = _poly(field, args.f, "f")
        case = lpoly.mult_suite(_multiplicative(field, args), f, args.smax,
                                args.enum_bound, args.processes, args.tol)
    elif kind == "G":
        if args.u is None:
            raise ValueError("Sum kind G needs --u")
        case = lpoly.gsum_suite(field, args.u, _element(field, args.a),
                                _element(field, args.b), args.smax,
                                _additive(field, args), args.enum_bound,
                                args.processes, args.tol)
    else:
        case = lpoly.generalized_suite(_poly(field, args.f, "f"),
                                       _poly(field, args.g, "g"),
                                       _additive(field, args), args.smax,
                                       args.enum_bound, args.processes,
                                       args.tol)
    return do_predict(case, report)


@public
def do_predict(case, report):
    for key, value in case.results.items():
        report.add(key, value)
    for item in case.verdicts:
        report.check(item)
    return report


P_predict = AP_subparsers.add_parser('predict', help=_cmd_predict.__doc__,
        parents=[P_common, P_field_opts, P_sum_opts])
P_predict.add_argument('kind', choices=('S', 'T', 'G', 'GEN'),
        help="Which sum to predict (see 'sum').")
P_predict.set_defaults(func=_cmd_predict)


# _____________________________________________________________________________
# Dickson polynomials

# dickson ---------------------------------------------------------------------

def _cmd_dickson(args):
    """Print D_n^(1)(x_1, ..., x_k, a) as a polynomial."""
    report = _new_report("dickson", args, k=args.k, n=args.n)
    return do_dickson(args.k, args.n, report)


@public
def do_dickson(k, n, report=None):
    report = report or RunReport("dickson", None, {"k": k, "n": n})
    poly = symfun.dickson_symbolic(k, n)
    report.add("polynomial", str(poly))
    report.check(verdict("series", symfun.dickson_symbolic(k, n, "series")
                         == poly))
    if n >= 1:
        report.check(verdict("waring", symfun.dickson_symbolic(k, n, "waring")
                             == poly))
    return report


P_dickson = AP_subparsers.add_parser('dickson', help=_cmd_dickson.__doc__,
                                     parents=[P_common])
P_dickson.add_argument('--k', type=int, default=1,
        help="Arity k (number of x variables). [Default: %(default)s]")
P_dickson.add_argument('--n', type=int, required=True,
        help="Index n.")
P_dickson.set_defaults(func=_cmd_dickson)


# _____________________________________________________________________________
# Sequences

# seq -------------------------------------------------------------------------

def _cmd_seq(args):
    """Sequence G_a over a binary field, with its autocorrelation spectrum."""
    field = _field(args, p=2)
    u = args.u if args.u is not None else 1
    a = _element(field, args.a)
    report = _new_report("seq", args, field, u=u, a=a.code)
    return do_seq(field, u, a, report, strict=not args.loose)


@public
def do_seq(field, u, a, report=None, strict=True):
    report = report or RunReport("seq", field.to_dict())
    seq = seqcorr.sequence_values(field, u, a, strict)
    spectrum = seqcorr.autocorrelation_spectrum(seq)
    report.add("sequence", seq)
    report.add("spectrum", spectrum)
    report.add("table", seq.to_dataframe())
    if math.gcd(u, field.q - 1) == 1:
        q = field.q
        report.check(exact_verdict("peak", q * q - q - 1, spectrum[1]))
        report.check(verdict("off-peak",
                             all(v == -q - 1 for h, v in spectrum.items()
                                 if h != 1)))
    return report


P_seq = AP_subparsers.add_parser('seq', help=_cmd_seq.__doc__,
        parents=[P_common, P_field_opts, P_sum_opts])
P_seq.add_argument('--loose', action='store_true',
        help="""Allow gcd(u, q-1) > 1; the spectrum is then only measured,
                never checked.""")
P_seq.set_defaults(func=_cmd_seq)


# _____________________________________________________________________________
# Verification

# verify ----------------------------------------------------------------------

def _cmd_verify(args):
    """Run named verification suites (or "all")."""
    names = verify.resolve_names(args.suites)
    overrides = {"p": args.p, "e": args.e, "u": args.u, "a": args.a,
                 "b": args.b, "f": args.f, "g": args.g, "j": args.j,
                 "smax": args.smax}
    overrides = {key: value for key, value in overrides.items()
                 if value is not None}
    report = _new_report("verify", args, suites=names, **overrides)
    return do_verify(names, overrides, report, args.enum_bound,
                     args.processes, args.tol)


@public
def do_verify(names, overrides=None, report=None, bound=None, processes=1,
              tol=params.MODULUS_TOL):
    report = report or RunReport("verify", None, {"suites": names})
    for name in names:
        result = verify.run_suite(name, overrides, bound, processes, tol)
        report.extend(result, name)
    return report


P_verify = AP_subparsers.add_parser('verify', help=_cmd_verify.__doc__,
        parents=[P_common, P_field_opts, P_sum_opts])
P_verify.add_argument('suites', nargs='+', metavar='SUITE',
        help="""Suite identifiers or their short prefixes (e.g. auto),
                or "all": %s""" % ", ".join(verify.SUITES))
P_verify.set_defaults(func=_cmd_verify, smax=None)


# version ---------------------------------------------------------------------

def print_version(_args):
    """Display this program's version."""
    print(__version__)


P_version = AP_subparsers.add_parser('version', help=print_version.__doc__)
P_version.set_defaults(func=print_version)


# _____________________________________________________________________________
# Shim for command-line execution

def parse_args(args=None):
    """Parse the command line."""
    return AP.parse_args(args=args)


def execute(args):
    """Run a parsed command; return its report (None on error) and the exit
    code: 0 if every check passed, 1 if any failed or the computation
    raised an error."""
    started = time.time()
    try:
        report = args.func(args)
    except (ValueError, RuntimeError, ZeroDivisionError) as exc:
        logging.error("Error: %s", exc)
        return None, 1
    if report is None:
        return None, 0
    if args.timing:
        report.duration = time.time() - started
    logging.info(report.summary())
    return report, report.exit_code


def run(args):
    """Run a parsed command, write its report and return the exit code."""
    if not hasattr(args, 'func'):
        AP.print_usage(sys.stderr)
        return 2
    report, code = execute(args)
    if report is not None:
        export.emit_report(report, args.format, args.output)
    return code


def run_command(argv):
    """Parse and run a command line (a list of strings), writing the report
    as requested; return the report and the exit code.

    Usage errors exit with status 2 via argparse.
    """
    args = parse_args(argv)
    if not hasattr(args, 'func'):
        AP.print_usage(sys.stderr)
        return None, 2
    report, code = execute(args)
    if report is not None:
        export.emit_report(report, args.format, args.output)
    return report, code
