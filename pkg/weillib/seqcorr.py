"""Sequences built from G_u over binary fields, and their correlations.

For q = 2^e and gcd(u, q-1) = 1 the sequence G_a lists G_u(a x) = G_u(ax, 1)
for x = g^0, g^1, ..., g^(q-2) in generator order, so a shift by h is an
index rotation by dlog(h). Values are integers since chi is +-1 here.
"""
from __future__ import absolute_import, division, print_function

import collections
import functools
import logging
import math

import pandas as pd

from . import core, params
from .charsum import additive_character, laurent_sum
from .gf.tables import generator_dlog
from .reports import SuiteResult, exact_verdict, verdict


def _check_field(field, u, strict=True):
    if field.p != 2:
        raise ValueError("Sequence correlations are defined over binary "
                         "fields only; got %s" % field)
    if u < 1:
        raise ValueError("Exponent u must be positive; got %d" % u)
    if math.gcd(u, field.q - 1) != 1:
        msg = ("gcd(u, q-1) = %d for u = %d, q = %d"
               % (math.gcd(u, field.q - 1), u, field.q))
        if strict:
            raise ValueError(msg)
        logging.warning("%s; correlations are measured, not guaranteed", msg)


@functools.lru_cache(maxsize=params.FIELD_CACHE_SIZE)
def g_table(field, u):
    """G_u(y, 1) for every y in F_q, indexed by element code.

    Index 0 holds G_u(0) = sum over c != 0 of chi(1/c) = -1.
    """
    chi = additive_character(field)
    values = []
    for y in field.elements():
        values.append(laurent_sum(chi, 1, {u: y, -1: field.one}).to_int())
    return tuple(values)


def g_value_at_zero(field, u=1):
    """The convention G_u(0) = -1, computed rather than assumed."""
    return g_table(field, u)[0]


class SequenceProfile(object):
    """The sequence (G_u(a g^k)) for k = 0..q-2."""

    def __init__(self, field, u, a, values):
        self.field = field
        self.u = u
        self.a = field.element(a)
        self.values = list(values)

    def __len__(self):
        return len(self.values)

    def __repr__(self):
        return "SequenceProfile(%s, u=%d, a=%r, %r)" % (
            self.field, self.u, self.a, self.values)

    def to_dataframe(self):
        logs = generator_dlog(self.field)
        return pd.DataFrame({
            "k": range(len(self.values)),
            "element": [int(logs.exp[k]) for k in range(len(self.values))],
            "value": self.values,
        }, columns=["k", "element", "value"])

    def to_dict(self):
        return {"u": self.u, "a": self.a.code, "values": self.values}


def sequence_values(field, u, a, strict=True):
    """G_a = (G_u(a x)) over x in F_q^*, in generator order."""
    _check_field(field, u, strict)
    a = field.element(a)
    if a.is_zero():
        raise ValueError("Sequence scale a must be nonzero")
    table = g_table(field, u)
    logs = generator_dlog(field)
    values = [table[(a * logs.power(k)).code] for k in range(field.q - 1)]
    return SequenceProfile(field, u, a, values)


def correlation(seq_a, seq_b, h):
    """sum over x in F_q^* of G_u(a x) G_u(b h x)."""
    if seq_a.field != seq_b.field or seq_a.u != seq_b.u:
        raise ValueError("Sequences differ in field or exponent")
    h = seq_a.field.element(h)
    shift = generator_dlog(seq_a.field).dlog(h)
    size = len(seq_a)
    return sum(seq_a.values[k] * seq_b.values[(k + shift) % size]
               for k in range(size))


def autocorrelation_spectrum(seq):
    """{code of h: autocorrelation at shift h} over all h in F_q^*."""
    return collections.OrderedDict(
        (h.code, correlation(seq, seq, h))
        for h in seq.field.nonzero_elements())


ConvolutionCheck = collections.namedtuple('ConvolutionCheck',
                                          'lhs rhs equal')


def convolution_identity_check(field, u, a, b, c):
    """Both sides of
    sum_x G_u(a x) G_u(b (c - x)) = q G_u(c (a^u' + b^u')^u) + G_u(b c)
    with u u' = 1 (mod q-1) and G_u(0) = -1.
    """
    _check_field(field, u)
    a, b, c = field.element(a), field.element(b), field.element(c)
    if a.is_zero() or b.is_zero() or c.is_zero():
        raise ValueError("a, b and c must all be nonzero")
    table = g_table(field, u)
    lhs = sum(table[(a * x).code] * table[(b * (c - x)).code]
              for x in field.nonzero_elements())
    u_inv = core.inverse_mod(u, field.q - 1)
    inner = a ** u_inv + b ** u_inv
    rhs = field.q * table[(c * inner ** u).code] + table[(b * c).code]
    return ConvolutionCheck(lhs, rhs, lhs == rhs)


# __________________________________________________________________________
# Suites

def valid_exponents(field):
    """Every u < q - 1 with gcd(u, q - 1) = 1 (just u = 1 for q = 2)."""
    order = field.q - 1
    return [u for u in range(1, max(order, 2)) if math.gcd(u, order) == 1]


def spectrum_suite(field, u):
    """Two-valued autocorrelation for every nonzero scale a, and the
    sequence sums sum_x G_u(a x) = 1."""
    q = field.q
    suite = SuiteResult("spectrum-q%d-u%d" % (q, u))
    for a in field.nonzero_elements():
        seq = sequence_values(field, u, a)
        spectrum = autocorrelation_spectrum(seq)
        peak = spectrum.pop(1)
        suite.add("a%d" % a.code, {"peak": peak, "off_peak":
                                   sorted(set(spectrum.values()))})
        suite.check(exact_verdict("peak-a%d" % a.code, q * q - q - 1, peak))
        suite.check(verdict("off-peak-a%d" % a.code,
                            all(v == -q - 1 for v in spectrum.values()),
                            None, values=sorted(set(spectrum.values())),
                            expected=-q - 1))
        suite.check(exact_verdict("sum-a%d" % a.code, 1, sum(seq.values)))
    return suite


def cross_suite(field, u):
    """Cross-correlation at h = 1: q^2 - q - 1 when a = b, -q - 1 otherwise."""
    q = field.q
    seqs = [sequence_values(field, u, a) for a in field.nonzero_elements()]
    suite = SuiteResult("cross-q%d-u%d" % (q, u))
    failures = 0
    for seq_a in seqs:
        for seq_b in seqs:
            expected = q * q - q - 1 if seq_a.a == seq_b.a else -q - 1
            if correlation(seq_a, seq_b, 1) != expected:
                failures += 1
    suite.check(verdict("cross", failures == 0, None, pairs=len(seqs) ** 2,
                        failures=failures))
    return suite


def convolution_suite(field, u):
    """The convolution identity on the whole (a, b, c) cube."""
    suite = SuiteResult("convolution-q%d-u%d" % (field.q, u))
    failures = []
    count = 0
    for a in field.nonzero_elements():
        for b in field.nonzero_elements():
            for c in field.nonzero_elements():
                count += 1
                check = convolution_identity_check(field, u, a, b, c)
                if not check.equal:
                    failures.append((a.code, b.code, c.code,
                                     check.lhs, check.rhs))
    suite.check(verdict("convolution", not failures, None, triples=count,
                        failures=failures))
    return suite
