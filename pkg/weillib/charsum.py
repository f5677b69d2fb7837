"""Characters of F_q, their liftings to F_{q^s}, and exact character sums.

Sums are computed by full enumeration of F_{q^s}. The per-element reference
evaluators (`additive_char_eval`, `mult_char_eval`) follow the definitions
through the tower; the sums themselves run as vectorized sweeps over
integer element codes (see `gf.tables`), splitting the field into chunks
whose exponent histograms are added exactly.
"""
from __future__ import absolute_import, division, print_function

import functools
import logging
import math

import numpy as np
import pandas as pd

from . import parallel
from .cyclo import CycloNumber, root_of_unity_power
from .gf.field import absolute_trace
from .gf.poly import coerce_poly, format_poly
from .gf.tables import generator_dlog, poly_eval_codes, tables_for
from .gf.tower import build_tower, norm_rel, trace_to_base

ADDITIVE = "additive"
MULTIPLICATIVE = "multiplicative"


class CharacterSpec(object):
    """An additive character chi_a or a multiplicative character psi_j.

    chi_a(c) = zeta_p^Tr(a c); psi_j(g^k) = zeta_(q-1)^(j k) for the
    canonical generator g, with psi_j(0) = 0.
    """

    def __init__(self, kind, field, parameter):
        if kind == ADDITIVE:
            parameter = field.element(parameter)
        elif kind == MULTIPLICATIVE:
            parameter = int(parameter) % (field.q - 1)
        else:
            raise ValueError("Unknown character kind %r" % kind)
        self.kind = kind
        self.field = field
        self.parameter = parameter

    @property
    def order(self):
        """Order of the character's values: p for additive characters,
        (q-1)/gcd(j, q-1) for multiplicative ones."""
        if self.kind == ADDITIVE:
            return self.field.p
        return (self.field.q - 1) // math.gcd(self.parameter, self.field.q - 1)

    @property
    def value_order(self):
        """Cyclotomic order N of the CycloNumbers this character yields."""
        if self.kind == ADDITIVE:
            return self.field.p
        return self.field.q - 1

    def is_trivial(self):
        if self.kind == ADDITIVE:
            return self.parameter.is_zero()
        return self.parameter == 0

    def __call__(self, c):
        """Value on an element of the base field."""
        c = self.field.element(c)
        if self.kind == ADDITIVE:
            return root_of_unity_power(self.field.p,
                                       absolute_trace(self.parameter * c))
        if c.is_zero():
            return CycloNumber.zero(self.field.q - 1)
        dlog = generator_dlog(self.field).dlog(c)
        return root_of_unity_power(self.field.q - 1, self.parameter * dlog)

    def __eq__(self, other):
        return (isinstance(other, CharacterSpec)
                and (self.kind, self.field, self.parameter)
                == (other.kind, other.field, other.parameter))

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.kind, self.field, self.parameter))

    def __repr__(self):
        return "CharacterSpec(%r, %s, %r)" % (self.kind, self.field,
                                               self.parameter)

    def to_dict(self):
        param = (self.parameter.code if self.kind == ADDITIVE
                 else self.parameter)
        return {"kind": self.kind, "parameter": param, "order": self.order}


def additive_character(field, a=1):
    """chi_a; the canonical character is chi_1."""
    return CharacterSpec(ADDITIVE, field, a)


def multiplicative_character(field, j=1):
    return CharacterSpec(MULTIPLICATIVE, field, j)


def quadratic_character(field):
    """eta, the multiplicative character of order 2 (q odd)."""
    if field.p == 2:
        raise ValueError("%s has no quadratic character" % field)
    return CharacterSpec(MULTIPLICATIVE, field, (field.q - 1) // 2)


def _check_kind(chi, kind, ctx=None):
    if chi.kind != kind:
        raise ValueError("Expected an %s character, got %s" % (kind, chi.kind))
    if ctx is not None and chi.field != ctx.base:
        raise ValueError("Character on %s used with tower over %s"
                         % (chi.field, ctx.base))


def additive_char_eval(chi, ctx, c):
    """chi^(s)(c) = zeta_p^Tr_abs(a Tr_rel(c)) for c in F_{q^s}."""
    _check_kind(chi, ADDITIVE, ctx)
    return chi(trace_to_base(ctx, c))


def mult_char_eval(psi, ctx, c):
    """psi^(s)(c) = psi(Norm(c)); zero at c = 0."""
    _check_kind(psi, MULTIPLICATIVE, ctx)
    return psi(norm_rel(ctx, c))


# __________________________________________________________________________
# Vectorized sweeps

def _additive_chunk(trace_by_log, p, order, terms, start, stop):
    """Histogram of Tr(sum_i t_i g^(m_i k)) mod p over k in [start, stop).

    `terms` holds (log of t_i, m_i) pairs; the constant part is handled by
    the caller.
    """
    ks = np.arange(start, stop, dtype=np.int64)
    expo = np.zeros(len(ks), dtype=np.int64)
    for coeff_log, mult in terms:
        expo += trace_by_log[(coeff_log + mult * ks) % order]
    return np.bincount(expo % p, minlength=p)


def _mult_chunk(table, coeff_codes, norm_unit, base_order, j, start, stop):
    """Histogram of j * dlog(Norm(f(y))) mod (q-1) over codes y in
    [start, stop), skipping the zeros of f."""
    values = poly_eval_codes(table, coeff_codes, np.arange(start, stop))
    logs = table.log[values[values != 0]]
    expo = (logs * norm_unit % base_order) * j % base_order
    return np.bincount(expo, minlength=base_order)


def laurent_sum(chi, s, terms, bound=None, processes=1):
    """sum over c in F_{q^s}^* of chi^(s)(sum_m t_m c^m), m any integer.

    `terms` maps exponents to base-field coefficients.
    """
    _check_kind(chi, ADDITIVE)
    field = chi.field
    p = field.p
    tables = tables_for(field, s, bound)
    order = tables.order
    if chi.is_trivial():
        return CycloNumber.rational(p, order)
    constant = field.zero
    pairs = []
    for mult, coeff in sorted(terms.items()):
        coeff = chi.parameter * field.element(coeff)
        if coeff.is_zero():
            continue
        if mult % order == 0:
            # c^m = 1 on the whole group
            constant = constant + coeff
        else:
            pairs.append((tables.log_of_base(coeff), mult))
    shift = tables.trace_code(int(tables.embed[constant.code]))
    func = functools.partial(_additive_chunk, tables.trace_by_log, p, order,
                             pairs)
    counts = parallel.sweep(func, order, processes)
    counts = np.roll(counts, shift)
    return CycloNumber.from_counts(p, counts)


def weil_sum_S(chi, f, s, bound=None, processes=1):
    """S_s(f) = sum over y in F_{q^s} of chi^(s)(f(y))."""
    f = coerce_poly(chi.field, f)
    nonzero = laurent_sum(chi, s, dict(enumerate(f)), bound, processes)
    # chi^(s) of a base-field constant c is chi(Tr(c)) = chi(s c)
    at_zero = chi(s * f[0]) if f else chi(chi.field.zero)
    return nonzero + at_zero


def mult_sum_T(psi, f, s, bound=None, processes=1):
    """T_s(f) = sum over y in F_{q^s} of psi^(s)(f(y)), psi^(s)(0) = 0."""
    _check_kind(psi, MULTIPLICATIVE)
    field = psi.field
    f = coerce_poly(field, f)
    base_order = field.q - 1
    if not f:
        return CycloNumber.zero(base_order)
    tables = tables_for(field, s, bound)
    func = functools.partial(_mult_chunk, tables.logs,
                             tables.embed_codes(f), tables.norm_unit,
                             base_order, psi.parameter)
    counts = parallel.sweep(func, tables.ctx.size, processes)
    return CycloNumber.from_counts(base_order, counts)


def g_sum(u, a, b, chi, s, bound=None, processes=1):
    """G_u^(s)(a, b) = sum over c in F_{q^s}^* of chi^(s)(a c^u + b c^-1)."""
    field = chi.field
    a, b = field.element(a), field.element(b)
    if a.is_zero():
        raise ValueError("G_u(a, b) requires a != 0; the a = 0 value used "
                         "by sequence correlations is seqcorr.g_value_at_zero")
    if u < 1:
        raise ValueError("Exponent u must be positive; got %d" % u)
    return laurent_sum(chi, s, _merge_terms({u: a}, {-1: b}),
                       bound, processes)


def generalized_sum(f, g, chi, s, bound=None, processes=1):
    """G^(s)(f, g) = sum over c in F_{q^s}^* of chi^(s)(f(c) + g(1/c))."""
    field = chi.field
    f, g = coerce_poly(field, f), coerce_poly(field, g)
    return laurent_sum(chi, s,
                       _merge_terms(dict(enumerate(f)),
                                    {-j: c for j, c in enumerate(g)}),
                       bound, processes)


def reflected_sum(u, a, b, chi, s, bound=None, processes=1):
    """sum over c in F_{q^s}^* of chi^(s)(a c^(q-1-u) + b c).

    Over F_q this equals G_u(a, b) (substitute c -> 1/c), but for s > 1 the
    exponent q-1-u no longer inverts c^u, so the values generally differ
    from G_u^(s)(a, b).
    """
    q = chi.field.q
    return laurent_sum(chi, s, _merge_terms({q - 1 - u: a}, {1: b}),
                       bound, processes)


def _merge_terms(*parts):
    merged = {}
    for part in parts:
        for mult, coeff in part.items():
            merged[mult] = merged[mult] + coeff if mult in merged else coeff
    return merged


def gauss_quadratic(field, chi=None):
    """g(eta, chi) = sum over c != 0 of eta(c) chi(c), q odd."""
    if field.p == 2:
        raise ValueError("Quadratic Gauss sums need odd q; got q = %d"
                         % field.q)
    chi = additive_character(field) if chi is None else chi
    _check_kind(chi, ADDITIVE)
    tables = tables_for(field, 1)
    order = tables.order
    twist_log = tables.log_of_base(chi.parameter)
    if twist_log is None:
        # trivial chi: sum of eta over F_q^* vanishes
        return CycloNumber.zero(field.p)
    ks = np.arange(order, dtype=np.int64)
    expo = tables.trace_by_log[(twist_log + ks) % order]
    squares = np.bincount(expo[ks % 2 == 0], minlength=field.p)
    others = np.bincount(expo[ks % 2 == 1], minlength=field.p)
    return (CycloNumber.from_counts(field.p, squares)
            - CycloNumber.from_counts(field.p, others))


# __________________________________________________________________________
# Series over extension levels

class SumSeries(object):
    """Values of one character sum at extension levels s = 1..S."""

    def __init__(self, meta, values):
        self.meta = dict(meta)
        self.values = list(values)

    def __len__(self):
        return len(self.values)

    def __getitem__(self, s):
        """1-based: series[s] is the sum over F_{q^s}."""
        if s < 1:
            raise IndexError("Sum series are indexed from s = 1")
        return self.values[s - 1]

    def __iter__(self):
        return iter(self.values)

    def __eq__(self, other):
        return isinstance(other, SumSeries) and self.values == other.values

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return "SumSeries(%r, [%s])" % (self.meta, ", ".join(map(str,
                                                                  self.values)))

    def to_dataframe(self):
        approx = [v.embed_complex() for v in self.values]
        return pd.DataFrame({
            "s": np.arange(1, len(self.values) + 1),
            "exact": [str(v) for v in self.values],
            "real": [z.real for z in approx],
            "imag": [z.imag for z in approx],
            "abs": [abs(z) for z in approx],
        }, columns=["s", "exact", "real", "imag", "abs"])


def sum_series(kind, chi, smax, bound=None, processes=1, **options):
    """SumSeries of one sum kind ("S", "T", "G" or "GEN") for s = 1..smax."""
    field = chi.field
    if kind == "S":
        f = coerce_poly(field, options["f"])
        meta = {"kind": "S", "f": format_poly(f)}
        func = lambda s: weil_sum_S(chi, f, s, bound, processes)
    elif kind == "T":
        f = coerce_poly(field, options["f"])
        meta = {"kind": "T", "f": format_poly(f)}
        func = lambda s: mult_sum_T(chi, f, s, bound, processes)
    elif kind == "G":
        u, a, b = options["u"], options["a"], options["b"]
        meta = {"kind": "G", "u": u, "a": field.element(a).code,
                "b": field.element(b).code}
        func = lambda s: g_sum(u, a, b, chi, s, bound, processes)
    elif kind == "GEN":
        f = coerce_poly(field, options["f"])
        g = coerce_poly(field, options["g"])
        meta = {"kind": "GEN", "f": format_poly(f), "g": format_poly(g)}
        func = lambda s: generalized_sum(f, g, chi, s, bound, processes)
    else:
        raise ValueError("Unknown sum kind %r" % kind)
    meta["field"] = field.to_dict()
    meta["character"] = chi.to_dict()
    values = []
    for s in range(1, smax + 1):
        values.append(func(s))
        logging.info("%s sum at s=%d: %s", meta["kind"], s, values[-1])
    return SumSeries(meta, values)
