#!/usr/bin/env python
"""Unit tests for finite fields, towers and lookup tables (weillib.gf)."""
from __future__ import absolute_import, division, print_function

import unittest

import numpy as np

from weillib import core, params
from weillib.gf import (FieldSpec, absolute_trace, build_tower,
                        enumerate_irreducible, enumerate_monic,
                        find_irreducible, frobenius, generator_dlog, in_base,
                        norm_rel, parse_element, parse_poly, poly_eval_codes,
                        pullback, tables_for, tower_tables, trace_rel,
                        trace_to_base)


class FieldTests(unittest.TestCase):
    """Tests for FieldSpec and FieldElement."""

    def test_canonical_modulus(self):
        self.assertEqual(FieldSpec(5).modulus, (0, 1))
        self.assertEqual(FieldSpec(2, 2).modulus, (1, 1, 1))
        self.assertEqual(FieldSpec(2, 3).modulus, (1, 1, 0, 1))
        self.assertEqual(FieldSpec(3, 2).modulus, (1, 0, 1))
        self.assertEqual(str(find_irreducible(2, 3)), "x^3 + x + 1")

    def test_bad_fields(self):
        self.assertRaises(ValueError, FieldSpec, 4)
        self.assertRaises(ValueError, FieldSpec, 3, 0)
        # x^2 + 1 = (x + 1)^2 over GF(2)
        self.assertRaises(ValueError, FieldSpec, 2, 2, (1, 0, 1))

    def test_codes(self):
        field = FieldSpec(3, 2)
        codes = [c.code for c in field.elements()]
        self.assertEqual(codes, list(range(9)))
        self.assertEqual(field.from_code(5).coeffs, (2, 1))
        self.assertEqual(int(field.x), 3)
        self.assertRaises(ValueError, field.from_code, 9)

    def test_int_constants(self):
        field = FieldSpec(5)
        self.assertEqual(field.element(7), field.element(2))
        self.assertEqual(3 * field.one, field.element(3))
        self.assertEqual(field.element(4) + 1, 0)

    def test_arithmetic(self):
        field = FieldSpec(2, 3)
        x = field.x
        self.assertEqual(x ** 3, x + 1)
        self.assertEqual(x ** 7, field.one)
        for c in field.nonzero_elements():
            self.assertEqual(c * c.inverse(), field.one)
            self.assertEqual(c / c, field.one)
            self.assertEqual(c - c, field.zero)
        self.assertRaises(ZeroDivisionError, field.zero.inverse)

    def test_mixed_fields(self):
        with self.assertRaises(ValueError):
            FieldSpec(2).one + FieldSpec(3).one

    def test_absolute_trace(self):
        field = FieldSpec(2, 2)
        self.assertEqual([absolute_trace(c) for c in field.elements()],
                         [0, 0, 1, 1])
        field = FieldSpec(3, 2)
        traces = [absolute_trace(c) for c in field.elements()]
        # Each residue is hit q/p times
        self.assertEqual(sorted(traces), [0, 0, 0, 1, 1, 1, 2, 2, 2])

    def test_parse(self):
        field = FieldSpec(3, 2)
        self.assertEqual(parse_element(field, "0:1"), field.x)
        self.assertEqual(parse_element(field, "5"), field.x + 2)
        self.assertRaises(ValueError, parse_element, field, "12")
        poly = parse_poly(FieldSpec(5), "0,1,0,1")
        self.assertEqual(len(poly), 4)
        self.assertEqual(poly[3], 1)


class PolyTests(unittest.TestCase):
    """Tests for monic polynomials."""

    def test_enumerate(self):
        field = FieldSpec(2)
        monic = list(enumerate_monic(field, 2))
        self.assertEqual(len(monic), 4)
        self.assertEqual([g.code for g in monic], [0, 1, 2, 3])
        counts = [len(list(enumerate_irreducible(field, k)))
                  for k in (1, 2, 3, 4)]
        self.assertEqual(counts, [2, 1, 2, 3])
        self.assertEqual(len(list(enumerate_irreducible(FieldSpec(3), 2))), 3)

    def test_irreducible_count(self):
        # Gauss's formula: (1/k) sum_{d | k} mu(d) q^(k/d)
        field = FieldSpec(2, 2)
        for k in (1, 2, 3):
            expect = sum(core.moebius(d) * field.q ** (k // d)
                         for d in core.divisors(k)) // k
            self.assertEqual(len(list(enumerate_irreducible(field, k))),
                             expect)

    def test_integer_helpers(self):
        self.assertEqual(core.divisors(12), [1, 2, 3, 4, 6, 12])
        self.assertEqual(core.prime_divisors(360), [2, 3, 5])
        self.assertEqual(core.euler_phi(36), 12)
        self.assertEqual([core.moebius(n) for n in (1, 2, 4, 6, 30)],
                         [1, -1, 0, 1, -1])
        self.assertTrue(core.is_prime(65537))
        self.assertFalse(core.is_prime(1))
        self.assertFalse(core.is_prime(561))
        self.assertIsInstance(core.euler_phi(7), int)
        self.assertRaises(ValueError, core.divisors, 0)

    def test_product_and_signs(self):
        field = FieldSpec(3)
        g, h = list(enumerate_monic(field, 1))[1:3]
        prod = g * h
        self.assertEqual(prod.degree, 2)
        self.assertFalse(prod.is_irreducible())
        # (x + 1)(x + 2) = x^2 + 2: c_1 = 0, c_2 = 2
        self.assertEqual([int(c) for c in prod.signed_coeffs()], [1, 0, 2])
        self.assertEqual(prod(field.element(1)), field.zero)


class TowerTests(unittest.TestCase):
    """Tests for extension towers."""

    def test_embedding(self):
        base = FieldSpec(2, 2)
        ctx = build_tower(base, 2)
        self.assertEqual(ctx.big, FieldSpec(2, 4))
        image = ctx.base_image
        self.assertTrue((image * image + image + 1).is_zero())
        for c in base.elements():
            self.assertTrue(in_base(ctx, ctx.embed(c)))
            self.assertEqual(pullback(ctx, ctx.embed(c)), c)
        self.assertEqual(sum(1 for c in ctx.big.elements()
                             if in_base(ctx, c)), 4)
        self.assertRaises(ValueError, pullback, ctx, ctx.big.x)

    def test_embedding_is_homomorphism(self):
        for p, e in ((2, 1), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2), (5, 1),
                     (7, 1), (11, 1), (13, 1)):
            base = FieldSpec(p, e)
            for s in (1, 2, 3):
                ctx = build_tower(base, s)
                images = {c: ctx.embed(c) for c in base.elements()}
                self.assertEqual(images[base.one], ctx.big.one)
                self.assertEqual(len(set(images.values())), base.q)
                for c in base.elements():
                    for d in base.elements():
                        self.assertEqual(images[c + d], images[c] + images[d])
                        self.assertEqual(images[c * d], images[c] * images[d])

    def test_trace_and_norm(self):
        base = FieldSpec(3)
        ctx = build_tower(base, 2)
        elements = list(ctx.big.elements())
        for c in elements:
            self.assertEqual(frobenius(ctx, c, 2), c)
            self.assertEqual(trace_to_base(ctx, c),
                             pullback(ctx, c + c ** 3))
        # Trace is onto with equal fibres; the norm of zero is zero
        traces = [trace_to_base(ctx, c).code for c in elements]
        self.assertEqual(sorted(traces), [0, 0, 0, 1, 1, 1, 2, 2, 2])
        self.assertEqual(norm_rel(ctx, ctx.big.zero), base.zero)
        c, d = elements[4], elements[7]
        self.assertEqual(norm_rel(ctx, c * d),
                         norm_rel(ctx, c) * norm_rel(ctx, d))
        self.assertRaises(ValueError, trace_rel, build_tower(base, 3), c, 2)

    def test_bounded_caches(self):
        self.assertEqual(build_tower.cache_info().maxsize,
                         params.FIELD_CACHE_SIZE)
        self.assertEqual(tower_tables.cache_info().maxsize,
                         params.FIELD_CACHE_SIZE)
        self.assertIs(build_tower(FieldSpec(3), 2), build_tower(FieldSpec(3), 2))

    def test_trace_intermediate(self):
        ctx = build_tower(FieldSpec(2), 4)
        for c in ctx.big.elements():
            mid = trace_rel(ctx, c, 2)
            self.assertEqual(frobenius(ctx, mid, 2), mid)
            self.assertEqual(trace_rel(ctx, c, 4), c)
            self.assertEqual(ctx.embed(trace_to_base(ctx, c)),
                             trace_rel(ctx, c, 1))


class TableTests(unittest.TestCase):
    """Tests for discrete-log and tower lookup tables."""

    def test_generators(self):
        self.assertEqual(generator_dlog(FieldSpec(5)).generator.code, 2)
        self.assertEqual(generator_dlog(FieldSpec(7)).generator.code, 3)
        self.assertEqual(generator_dlog(FieldSpec(2, 2)).generator,
                         FieldSpec(2, 2).x)

    def test_log_table(self):
        field = FieldSpec(3, 3)
        logs = generator_dlog(field)
        self.assertEqual(sorted(logs.exp.tolist()), list(range(1, 27)))
        for c in field.nonzero_elements():
            self.assertEqual(logs.power(logs.dlog(c)), c)
        self.assertRaises(ValueError, logs.dlog, field.zero)

    def test_tower_tables(self):
        base = FieldSpec(3)
        tables = tables_for(base, 2)
        ctx = tables.ctx
        for c in ctx.big.elements():
            self.assertEqual(tables.trace_code(c.code),
                             absolute_trace(trace_to_base(ctx, c)))
        for m in range(tables.order):
            c = tables.logs.power(m)
            expect = generator_dlog(base).dlog(norm_rel(ctx, c))
            self.assertEqual(int(tables.norm_dlog([m])[0]), expect)

    def test_poly_eval_codes(self):
        field = FieldSpec(2, 3)
        logs = generator_dlog(field)
        coeffs = [field.one, field.x, field.zero, field.one]
        points = np.arange(field.q)
        values = poly_eval_codes(logs, [c.code for c in coeffs], points)
        for code, value in zip(points, values):
            c = field.from_code(int(code))
            expect = c ** 3 + field.x * c + 1
            self.assertEqual(int(value), expect.code)


if __name__ == '__main__':
    unittest.main(verbosity=2)
