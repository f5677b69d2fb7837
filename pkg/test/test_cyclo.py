#!/usr/bin/env python
"""Unit tests for exact cyclotomic arithmetic."""
from __future__ import absolute_import, division, print_function

import math
import unittest
from fractions import Fraction

import numpy as np

from weillib import core
from weillib.cyclo import (CycloNumber, cyclo_sum, cyclotomic_polynomial,
                           root_of_unity_power)


def zeta(order, k=1):
    return root_of_unity_power(order, k)


class CyclotomicPolynomialTests(unittest.TestCase):

    def test_small_orders(self):
        self.assertEqual(cyclotomic_polynomial(1), (-1, 1))
        self.assertEqual(cyclotomic_polynomial(2), (1, 1))
        self.assertEqual(cyclotomic_polynomial(3), (1, 1, 1))
        self.assertEqual(cyclotomic_polynomial(4), (1, 0, 1))
        self.assertEqual(cyclotomic_polynomial(6), (1, -1, 1))
        self.assertEqual(cyclotomic_polynomial(12), (1, 0, -1, 0, 1))

    def test_bounds(self):
        self.assertRaises(ValueError, cyclotomic_polynomial, 0)


class CycloNumberTests(unittest.TestCase):
    """Tests for the CycloNumber class."""

    def test_canonical_form(self):
        self.assertTrue(cyclo_sum([zeta(3, k) for k in range(3)], 3).is_zero())
        self.assertTrue(CycloNumber.from_counts(5, [1] * 5).is_zero())
        self.assertEqual(zeta(7, 9), zeta(7, 2))
        self.assertEqual(zeta(2), -1)
        self.assertEqual(str(CycloNumber(3, [1, 2])), "1 + 2*z3")
        self.assertEqual(str(CycloNumber.zero(5)), "0")

    def test_arithmetic(self):
        z = zeta(5)
        self.assertEqual(z ** 5, 1)
        self.assertEqual(z * z.conjugate(), 1)
        self.assertEqual((z + 1) - z, 1)
        self.assertEqual((2 * z + 4) / 2, z + 2)
        self.assertEqual(3 * z, z + z + z)
        self.assertEqual((CycloNumber.rational(3, Fraction(1, 2)) * 4)
                         .to_int(), 2)

    def test_gauss_sum(self):
        # (sum_c zeta_5^(c^2))^2 = 5 since 5 = 1 (mod 4)
        gauss = cyclo_sum([zeta(5, c * c) for c in range(5)], 5)
        self.assertEqual(gauss * gauss, 5)
        self.assertAlmostEqual(abs(gauss), 5 ** 0.5)
        # and for 3 = 3 (mod 4) the square is -3
        gauss = cyclo_sum([zeta(3, c * c) for c in range(3)], 3)
        self.assertEqual(gauss * gauss, -3)

    def test_mixed_orders(self):
        self.assertEqual(CycloNumber.rational(5, 2) + zeta(3), zeta(3) + 2)
        self.assertEqual(zeta(3), zeta(6, 2))
        self.assertNotEqual(zeta(3), zeta(6))
        with self.assertRaises(ValueError):
            zeta(3) + zeta(5)

    def test_embedding(self):
        self.assertAlmostEqual(complex(zeta(4)), 1j)
        self.assertAlmostEqual(zeta(3).embed_complex(),
                               complex(-0.5, 3 ** 0.5 / 2))

    def test_errors(self):
        z = zeta(3)
        self.assertRaises(TypeError, lambda: 1 / z)
        self.assertRaises(TypeError, lambda: z / z)
        self.assertRaises(ZeroDivisionError, lambda: z / 0)
        self.assertRaises(ValueError, lambda: z ** -1)
        self.assertRaises(ValueError, (z + 1).to_fraction)
        self.assertRaises(ValueError, CycloNumber.rational(3, Fraction(1, 2))
                          .to_int)
        self.assertRaises(TypeError, hash, z)



class CycloPropertyTests(unittest.TestCase):
    """Ring and embedding properties on seeded random elements."""
    orders = (2, 3, 4, 5, 7, 8, 12)

    def setUp(self):
        self.rng = np.random.default_rng(4217)

    def _random(self, order):
        return CycloNumber(order, [int(c) for c in
                                   self.rng.integers(-3, 4, size=order)])

    def test_ring_axioms(self):
        for order in self.orders:
            one, zero = CycloNumber.one(order), CycloNumber.zero(order)
            for _trial in range(20):
                x, y, z = (self._random(order) for _i in range(3))
                self.assertEqual((x + y) + z, x + (y + z))
                self.assertEqual((x * y) * z, x * (y * z))
                self.assertEqual(x + y, y + x)
                self.assertEqual(x * y, y * x)
                self.assertEqual(x * (y + z), x * y + x * z)
                self.assertEqual(x + zero, x)
                self.assertEqual(x * one, x)
                self.assertTrue((x + (-x)).is_zero())
                self.assertTrue((x * zero).is_zero())

    def test_primitive_root_sums(self):
        # The sum of the primitive N-th roots of unity is mu(N)
        for order in range(1, 31):
            total = cyclo_sum([zeta(order, k) for k in range(order)
                               if math.gcd(k, order) == 1], order)
            self.assertEqual(total, core.moebius(order))

    def test_embedding_homomorphism(self):
        for order in self.orders:
            for _trial in range(10):
                x, y = self._random(order), self._random(order)
                self.assertAlmostEqual((x + y).embed_complex(),
                                       x.embed_complex() + y.embed_complex())
                self.assertAlmostEqual((x * y).embed_complex(),
                                       x.embed_complex() * y.embed_complex())
                self.assertAlmostEqual(x.conjugate().embed_complex(),
                                       x.embed_complex().conjugate())

    def test_promote_then_embed(self):
        for order in self.orders:
            x = self._random(order)
            for factor in (2, 3, 5):
                lifted = x.promote(order * factor)
                self.assertEqual(lifted, x)
                self.assertAlmostEqual(lifted.embed_complex(),
                                       x.embed_complex())
        self.assertRaises(ValueError, zeta(4).promote, 6)


if __name__ == '__main__':
    unittest.main(verbosity=2)
