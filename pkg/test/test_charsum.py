#!/usr/bin/env python
"""Unit tests for characters and exact character sums."""
from __future__ import absolute_import, division, print_function

import unittest

import numpy as np

from weillib import charsum, lpoly, parallel
from weillib.cyclo import CycloNumber, cyclo_sum
from weillib.gf import FieldSpec, build_tower


def _ones(start, stop):
    return np.ones(3, dtype=np.int64) * (stop - start)


def brute_S(chi, f, s):
    """Reference S_s(f), one element at a time through the tower."""
    ctx = build_tower(chi.field, s)
    return cyclo_sum([charsum.additive_char_eval(chi, ctx, ctx.evaluate(f, y))
                      for y in ctx.big.elements()], chi.value_order)


def brute_T(psi, f, s):
    ctx = build_tower(psi.field, s)
    return cyclo_sum([charsum.mult_char_eval(psi, ctx, ctx.evaluate(f, y))
                      for y in ctx.big.elements()], psi.value_order)


class CharacterTests(unittest.TestCase):
    """Tests for CharacterSpec."""

    def test_orders(self):
        field = FieldSpec(7)
        self.assertEqual(charsum.additive_character(field).order, 7)
        self.assertEqual(charsum.multiplicative_character(field, 2).order, 3)
        self.assertEqual(charsum.quadratic_character(field).order, 2)
        self.assertRaises(ValueError, charsum.quadratic_character,
                          FieldSpec(2, 2))

    def test_values(self):
        field = FieldSpec(5)
        eta = charsum.quadratic_character(field)
        self.assertEqual([eta(c) for c in range(5)], [0, 1, -1, -1, 1])
        chi = charsum.additive_character(field, 2)
        self.assertEqual(chi(3), CycloNumber.from_counts(5, [0, 1]))
        self.assertTrue(charsum.additive_character(field, 0).is_trivial())

    def test_lifting(self):
        field = FieldSpec(2, 2)
        chi = charsum.additive_character(field)
        ctx = build_tower(field, 2)
        for c in field.elements():
            # chi^(2) of an embedded constant is chi(2 c) = 1
            self.assertEqual(charsum.additive_char_eval(chi, ctx,
                                                        ctx.embed(c)), 1)


class SumTests(unittest.TestCase):
    """Tests for the vectorized sums against direct evaluation."""

    def test_weil_sum(self):
        field = FieldSpec(3)
        chi = charsum.additive_character(field)
        self.assertEqual(charsum.weil_sum_S(chi, [0, 0, 1], 1),
                         CycloNumber(3, [1, 2]))
        for f in ([0, 0, 1], [1, 2, 0, 1], [2, 1, 1, 0, 1]):
            for s in (1, 2, 3):
                self.assertEqual(charsum.weil_sum_S(chi, f, s),
                                 brute_S(chi, f, s))

    def test_weil_sum_extension(self):
        field = FieldSpec(2, 2)
        chi = charsum.additive_character(field, field.x)
        f = [1, field.x, 0, 1]
        for s in (1, 2):
            self.assertEqual(charsum.weil_sum_S(chi, f, s), brute_S(chi, f, s))

    def test_mult_sum(self):
        field = FieldSpec(3)
        psi = charsum.quadratic_character(field)
        self.assertEqual(charsum.mult_sum_T(psi, [0, -1, 1], 1), -1)
        field = FieldSpec(5)
        for j in (1, 2):
            psi = charsum.multiplicative_character(field, j)
            for s in (1, 2):
                self.assertEqual(charsum.mult_sum_T(psi, [1, 0, 1], s),
                                 brute_T(psi, [1, 0, 1], s))

    def test_kloosterman(self):
        field = FieldSpec(3)
        chi = charsum.additive_character(field)
        values = [charsum.g_sum(1, 1, 1, chi, s) for s in (1, 2, 3)]
        self.assertEqual(values, [-1, 5, 8])
        self.assertEqual(charsum.generalized_sum([0, 1], [0, 1], chi, 2), 5)
        field = FieldSpec(2)
        chi = charsum.additive_character(field)
        self.assertEqual([charsum.g_sum(1, 1, 1, chi, s) for s in (1, 2)],
                         [1, 3])
        self.assertRaises(ValueError, charsum.g_sum, 1, 0, 1, chi, 1)

    def test_reflected(self):
        chi = charsum.additive_character(FieldSpec(3))
        self.assertEqual(charsum.reflected_sum(1, 1, 1, chi, 1),
                         charsum.g_sum(1, 1, 1, chi, 1))
        self.assertEqual(charsum.reflected_sum(1, 1, 1, chi, 2), -1)

    def test_trivial_character(self):
        field = FieldSpec(5)
        chi = charsum.additive_character(field, 0)
        self.assertEqual(charsum.g_sum(2, 1, 1, chi, 2), 24)

    def test_gauss_quadratic(self):
        self.assertEqual(charsum.gauss_quadratic(FieldSpec(3)) ** 2, -3)
        self.assertEqual(charsum.gauss_quadratic(FieldSpec(5)) ** 2, 5)
        self.assertEqual(charsum.gauss_quadratic(FieldSpec(3, 2)) ** 2, 9)
        self.assertRaises(ValueError, charsum.gauss_quadratic,
                          FieldSpec(2, 3))

    def test_series(self):
        chi = charsum.additive_character(FieldSpec(3))
        series = charsum.sum_series("G", chi, 3, u=1, a=1, b=1)
        self.assertEqual(len(series), 3)
        self.assertEqual(series[2], 5)
        self.assertEqual(list(series), [-1, 5, 8])
        self.assertRaises(IndexError, series.__getitem__, 0)
        table = series.to_dataframe()
        self.assertEqual(list(table.columns),
                         ["s", "exact", "real", "imag", "abs"])
        self.assertEqual(table["exact"].tolist(), ["-1", "5", "8"])
        self.assertAlmostEqual(table["abs"].iloc[0], 1.0)
        self.assertRaises(ValueError, charsum.sum_series, "X", chi, 1)


class SumPropertyTests(unittest.TestCase):
    """Exhaustive character and sum identities on small fields."""

    def test_additive_character_lift(self):
        for base, s in ((FieldSpec(3), 2), (FieldSpec(2, 2), 2),
                        (FieldSpec(5), 1), (FieldSpec(5), 2)):
            chi = charsum.additive_character(base)
            ctx = build_tower(base, s)
            elements = list(ctx.big.elements())
            values = {c: charsum.additive_char_eval(chi, ctx, c)
                      for c in elements}
            for c in elements:
                for d in elements:
                    self.assertEqual(values[c + d], values[c] * values[d])

    def test_multiplicative_character_lift(self):
        for base, s, j in ((FieldSpec(3), 2, 1), (FieldSpec(5), 2, 1),
                           (FieldSpec(5), 2, 2), (FieldSpec(2, 2), 2, 1)):
            psi = charsum.multiplicative_character(base, j)
            ctx = build_tower(base, s)
            elements = list(ctx.big.elements())
            values = {c: charsum.mult_char_eval(psi, ctx, c)
                      for c in elements}
            for c in elements:
                for d in elements:
                    self.assertEqual(values[c * d], values[c] * values[d])

    def test_g_sum_depends_on_ab_power(self):
        # G_u(a, b) = G_u(a b^u, 1), by c -> b c
        for p, e in ((2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)):
            field = FieldSpec(p, e)
            chi = charsum.additive_character(field)
            for u in (1, 2, 3):
                for a in field.nonzero_elements():
                    for b in field.nonzero_elements():
                        self.assertEqual(
                            charsum.g_sum(u, a, b, chi, 1),
                            charsum.g_sum(u, a * b ** u, 1, chi, 1))

    def test_weil_bound(self):
        for p, e in ((2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)):
            field = FieldSpec(p, e)
            chi = charsum.additive_character(field)
            for n in range(1, 5):
                if n % p == 0:
                    continue
                for c in field.elements():
                    f = [c, 1] if n == 1 else [c, 1] + [0] * (n - 2) + [1]
                    series = [charsum.weil_sum_S(chi, f, s)
                              for s in (1, 2, 3)]
                    checks = lpoly.weil_bound_check(series, n, field.q)
                    self.assertTrue(all(v.passed for v in checks),
                                    (field, n, c.code, series))


class SweepTests(unittest.TestCase):
    """Tests for chunked sweeps."""

    def test_chunks(self):
        chunks = list(parallel.to_chunks(20, 7))
        self.assertEqual(chunks, [(0, 7), (7, 14), (14, 20)])
        self.assertEqual(list(parallel.to_chunks(0, 7)), [])
        self.assertRaises(ValueError, list, parallel.to_chunks(5, 0))

    def test_sweep(self):
        total = parallel.sweep(_ones, 20, 1, chunk_size=7)
        self.assertEqual(total.tolist(), [20, 20, 20])
        self.assertIsNone(parallel.sweep(_ones, 0))

    def test_workers(self):
        self.assertEqual(parallel.worker_count(3), 3)
        self.assertGreaterEqual(parallel.worker_count(0), 1)
        with parallel.pick_pool(1) as pool:
            self.assertIsInstance(pool, parallel.InlineExecutor)
            self.assertEqual(pool.map(pow, [2, 3], [2, 2]), [4, 9])


if __name__ == '__main__':
    unittest.main(verbosity=2)
