"""Integer-code lookup tables for vectorized sweeps over a field.

Elements are handled as integer codes (see `field.FieldSpec.from_code`) in
numpy arrays. Multiplication by a fixed element is a GF(p)-linear map on
coefficient vectors, and the absolute trace is a GF(p)-linear functional,
so both tables are filled by matrix products instead of element loops.
"""
from __future__ import absolute_import, division, print_function

import functools
import logging

import numpy as np

from .. import core, params, parallel
from .field import absolute_trace
from .tower import build_tower


def code_digits(spec, codes):
    """Coefficient matrix (n x e) of an array of element codes."""
    codes = np.asarray(codes, dtype=np.int64)
    place = spec.p ** np.arange(spec.e, dtype=np.int64)
    return (codes[:, np.newaxis] // place) % spec.p


def digits_code(spec, digits):
    place = spec.p ** np.arange(spec.e, dtype=np.int64)
    return digits.dot(place)


def mul_matrix(c):
    """Matrix M over GF(p) with digits(y * c) = digits(y) . M (mod p)."""
    spec = c.owner
    rows = []
    basis = spec.one
    for _i in range(spec.e):
        rows.append((basis * c).coeffs)
        basis = basis * spec.x
    return np.array(rows, dtype=np.int64)


def trace_vector(spec, twist=None):
    """Vector t over GF(p) with Tr(twist * y) = digits(y) . t (mod p)."""
    twist = spec.one if twist is None else twist
    vector = []
    basis = spec.one
    for _i in range(spec.e):
        vector.append(absolute_trace(basis * twist))
        basis = basis * spec.x
    return np.array(vector, dtype=np.int64)


def find_generator(spec):
    """Smallest element (by code) of multiplicative order q - 1."""
    order = spec.q - 1
    if order == 1:
        return spec.one
    cofactors = [order // prime for prime in core.prime_divisors(order)]
    for candidate in spec.nonzero_elements():
        if all(candidate ** cof != spec.one for cof in cofactors):
            return candidate
    raise RuntimeError("No generator found in %s" % spec)


class LogTable(object):
    """Exponential and discrete-log tables of a field's cyclic group.

    Attributes
    ----------
    generator : FieldElement
        The smallest element of order q - 1.
    exp : np.ndarray
        exp[k] is the code of generator^k, 0 <= k < q - 1.
    log : np.ndarray
        log[code] is the discrete log of a nonzero element; log[0] is -1.
    """

    def __init__(self, spec, generator, exp):
        self.spec = spec
        self.generator = generator
        self.exp = exp
        self.log = np.full(spec.q, -1, dtype=np.int64)
        self.log[exp] = np.arange(len(exp), dtype=np.int64)
        if (self.log[1:] < 0).any():
            raise RuntimeError("Generator %r does not span %s"
                               % (generator, spec))

    @property
    def order(self):
        return self.spec.q - 1

    def dlog(self, c):
        c = self.spec.element(c)
        if c.is_zero():
            raise ValueError("Zero has no discrete logarithm")
        return int(self.log[c.code])

    def power(self, k):
        return self.spec.from_code(int(self.exp[k % self.order]))


@functools.lru_cache(maxsize=params.FIELD_CACHE_SIZE)
def generator_dlog(spec, bound=None):
    """Generator and discrete-log table of `spec`.

    The table is filled by a single sweep of multiplications by the
    generator, done a block at a time: the first block of powers is built
    one product at a time, and each later block is the previous one times
    generator^blocksize, applied to all digit vectors at once.
    """
    core.check_enum_bound(spec.q, params.DLOG_BOUND if bound is None
                          else bound, "discrete-log table")
    generator = find_generator(spec)
    order = spec.q - 1
    block = max(1, int(np.sqrt(order)))
    first = [spec.one]
    for _i in range(1, min(block, order)):
        first.append(first[-1] * generator)
    digits = np.array([c.coeffs for c in first], dtype=np.int64)
    step = mul_matrix(generator ** block)
    blocks = [digits_code(spec, digits)]
    filled = len(first)
    while filled < order:
        digits = digits.dot(step) % spec.p
        blocks.append(digits_code(spec, digits))
        filled += len(digits)
    exp = np.concatenate(blocks)[:order]
    logging.debug("Discrete-log table for %s: generator %r", spec, generator)
    return LogTable(spec, generator, exp)


# __________________________________________________________________________
# Vectorized arithmetic on code arrays

def add_codes(spec, left, right):
    digits = (code_digits(spec, left) + code_digits(spec, right)) % spec.p
    return digits_code(spec, digits)


def mul_codes(table, left, right):
    left = np.asarray(left, dtype=np.int64)
    right = np.asarray(right, dtype=np.int64)
    nonzero = (left != 0) & (right != 0)
    logsum = (table.log[left] + table.log[right]) % table.order
    return np.where(nonzero, table.exp[logsum], 0)


def poly_eval_codes(table, coeff_codes, point_codes):
    """Horner evaluation of a polynomial (ascending big-field codes) at many
    points at once."""
    spec = table.spec
    points = np.asarray(point_codes, dtype=np.int64)
    result = np.zeros(len(points), dtype=np.int64)
    for code in reversed(coeff_codes):
        result = mul_codes(table, result, points)
        if code:
            result = add_codes(spec, result, np.full(len(points), code,
                                                     dtype=np.int64))
    return result


class TowerTables(object):
    """Lookup arrays for one tower F_{q^s} / F_q.

    Attributes
    ----------
    logs : LogTable
        Discrete logs of the big field.
    trace_by_log : np.ndarray
        trace_by_log[m] = Tr_{F_{q^s}/GF(p)}(g^m) for the big generator g.
    embed : np.ndarray
        embed[code] is the big-field code of a base-field element.
    norm_unit : int
        Multiplier r with dlog_base(Norm(g^m)) = m * r (mod q - 1).
    """

    def __init__(self, ctx, bound=None):
        core.check_enum_bound(ctx.size, bound, "tower %s" % ctx)
        self.ctx = ctx
        self.logs = generator_dlog(ctx.big, core.enum_bound(bound))
        big = ctx.big
        trace = trace_vector(big)
        self.trace_by_log = np.concatenate([
            code_digits(big, self.logs.exp[start:stop]).dot(trace) % big.p
            for start, stop in parallel.to_chunks(self.logs.order)])
        self.embed = np.array([ctx.embed(c).code
                               for c in ctx.base.elements()], dtype=np.int64)
        self.base_logs = generator_dlog(ctx.base, core.enum_bound(bound))
        base_order = ctx.q - 1
        if base_order == 1:
            self.norm_unit = 0
        else:
            # embed(base generator) = g^(r' (Q-1)/(q-1)); Norm(g^m) is
            # embed(base generator)^(m / r')
            image_log = int(self.logs.log[
                self.embed[self.base_logs.generator.code]])
            cofactor = (ctx.size - 1) // base_order
            self.norm_unit = core.inverse_mod(image_log // cofactor,
                                              base_order)

    @property
    def order(self):
        """Order of the big field's multiplicative group."""
        return self.logs.order

    def log_of_base(self, c):
        """Big-field discrete log of an embedded base element; None for 0."""
        code = int(self.embed[self.ctx.base.element(c).code])
        if not code:
            return None
        return int(self.logs.log[code])

    def embed_codes(self, coeffs):
        return [int(self.embed[c.code]) for c in coeffs]

    def trace_code(self, code):
        """Absolute trace of a big-field element given by code."""
        if not code:
            return 0
        return int(self.trace_by_log[self.logs.log[code]])

    def norm_dlog(self, big_logs):
        """Base-field discrete log of Norm(g^m) for an array of m."""
        base_order = self.ctx.q - 1
        return (np.asarray(big_logs, dtype=np.int64) * self.norm_unit
                % base_order)


@functools.lru_cache(maxsize=params.FIELD_CACHE_SIZE)
def tower_tables(ctx, bound=None):
    """Build (and cache) the lookup tables of a tower."""
    logging.info("Building lookup tables for %s (%d elements)",
                 ctx, ctx.size)
    return TowerTables(ctx, bound)


def tables_for(base, s, bound=None):
    return tower_tables(build_tower(base, s), bound)
