"""Exact arithmetic in cyclotomic fields Q(zeta_N).

Every character value and every character sum is a CycloNumber: a vector of
phi(N) rationals in the power basis 1, zeta, ..., zeta^(phi(N)-1), reduced
modulo the cyclotomic polynomial Phi_N. That form is canonical, so equality
is exact coefficient comparison.
"""
from __future__ import absolute_import, division, print_function

import functools
import numbers
from fractions import Fraction

import numpy as np

from . import core, params


@functools.lru_cache(maxsize=params.CYCLO_CACHE_SIZE)
def cyclotomic_polynomial(n):
    """Integer coefficients of Phi_n in ascending powers.

    Computed by exact division of x^n - 1 by Phi_d for every proper divisor d.
    """
    if not 1 <= n <= params.CYCLO_BOUND:
        raise ValueError("Cyclotomic order must be in [1, %d]; got %d"
                         % (params.CYCLO_BOUND, n))
    num = [-1] + [0] * (n - 1) + [1]
    for d in core.divisors(n)[:-1]:
        num = _exact_divide(num, cyclotomic_polynomial(d))
    return tuple(num)


def _exact_divide(num, den):
    """Quotient of integer polynomials where den is monic and divides num."""
    num = list(num)
    dlen = len(den)
    quot = [0] * (len(num) - dlen + 1)
    for top in range(len(num) - 1, dlen - 2, -1):
        lead = num[top]
        shift = top - dlen + 1
        quot[shift] = lead
        if lead:
            for j in range(dlen):
                num[shift + j] -= lead * den[j]
    if any(num[:dlen - 1]):
        raise ArithmeticError("Inexact cyclotomic division")
    return quot


def _reduce(order, coeffs):
    """Reduce a power-basis coefficient list of any length modulo Phi_N."""
    phi_n = cyclotomic_polynomial(order)
    deg = len(phi_n) - 1
    coeffs = list(coeffs)
    for top in range(len(coeffs) - 1, deg - 1, -1):
        lead = coeffs[top]
        if lead:
            shift = top - deg
            for j in range(deg):
                if phi_n[j]:
                    coeffs[shift + j] -= lead * phi_n[j]
            coeffs[top] = 0
    coeffs = coeffs[:deg] + [0] * (deg - len(coeffs))
    return tuple(Fraction(c) for c in coeffs)


def _is_scalar(value):
    return isinstance(value, (numbers.Integral, Fraction))


class CycloNumber(object):
    """An exact element of Q(zeta_N), immutable.

    Arithmetic is defined between numbers of the same order N, and with
    ints or Fractions. Rational CycloNumbers of any order combine with
    everything. Division is only by nonzero rational scalars.
    """
    __slots__ = ('order', 'coeffs')

    def __init__(self, order, coeffs):
        self.order = int(order)
        self.coeffs = _reduce(self.order, coeffs)

    # Constructors

    @classmethod
    def rational(cls, order, value):
        return cls(order, [Fraction(value)])

    @classmethod
    def zero(cls, order):
        return cls(order, [])

    @classmethod
    def one(cls, order):
        return cls(order, [1])

    @classmethod
    def from_counts(cls, order, counts):
        """sum_r counts[r] * zeta_N^r, for r in [0, N)."""
        counts = [int(c) for c in counts]
        if len(counts) > order:
            raise ValueError("Got %d counts for order %d"
                             % (len(counts), order))
        return cls(order, counts)

    # Predicates and conversions

    def is_zero(self):
        return not any(self.coeffs)

    def is_rational(self):
        return not any(self.coeffs[1:])

    def to_fraction(self):
        if not self.is_rational():
            raise ValueError("%s is not rational" % self)
        return self.coeffs[0]

    def to_int(self):
        value = self.to_fraction()
        if value.denominator != 1:
            raise ValueError("%s is not an integer" % self)
        return value.numerator

    def promote(self, order):
        """The same number viewed in Q(zeta_M) for a multiple M of N."""
        if order % self.order:
            raise ValueError("Cannot promote order %d to %d"
                             % (self.order, order))
        ratio = order // self.order
        lifted = [0] * (ratio * (len(self.coeffs) - 1) + 1)
        for i, c in enumerate(self.coeffs):
            lifted[i * ratio] = c
        return CycloNumber(order, lifted)

    def embed_complex(self):
        """Complex value at zeta_N = exp(2 pi i / N), in double precision.

        The error is at most about phi(N) * max|coeff| * 2^-50 for the
        orders and coefficient sizes used here.
        """
        powers = np.exp(2j * np.pi * np.arange(len(self.coeffs)) / self.order)
        return complex(np.dot(np.array([float(c) for c in self.coeffs]),
                              powers))

    __complex__ = embed_complex

    def __abs__(self):
        return abs(self.embed_complex())

    # Arithmetic

    def _coerce(self, other):
        if isinstance(other, CycloNumber):
            if other.order == self.order:
                return other
            if other.is_rational():
                return CycloNumber.rational(self.order, other.coeffs[0])
            if self.is_rational():
                return other
            raise ValueError("Cyclotomic orders differ (%d vs %d); promote "
                             "to a common order first"
                             % (self.order, other.order))
        if _is_scalar(other):
            return CycloNumber.rational(self.order, other)
        return NotImplemented

    def _lift_self(self, other):
        """self in the order of `other` when self is the rational side."""
        if other.order != self.order:
            return CycloNumber.rational(other.order, self.coeffs[0])
        return self

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        mine = self._lift_self(other)
        return CycloNumber(other.order, [a + b for a, b in
                                         zip(mine.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CycloNumber(self.order, [-c for c in self.coeffs])

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        mine = self._lift_self(other)
        if mine.is_rational():
            return CycloNumber(other.order, [mine.coeffs[0] * c
                                             for c in other.coeffs])
        prod = [0] * (2 * len(mine.coeffs) - 1)
        for i, a_i in enumerate(mine.coeffs):
            if a_i:
                for j, b_j in enumerate(other.coeffs):
                    if b_j:
                        prod[i + j] += a_i * b_j
        return CycloNumber(other.order, prod)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, CycloNumber) and other.is_rational():
            other = other.coeffs[0]
        if not _is_scalar(other):
            raise TypeError("CycloNumbers can only be divided by nonzero "
                            "rationals, not %r" % (other,))
        if not other:
            raise ZeroDivisionError("Division of %s by zero" % self)
        other = Fraction(other)
        return CycloNumber(self.order, [c / other for c in self.coeffs])

    __div__ = __truediv__

    def __pow__(self, exponent):
        exponent = int(exponent)
        if exponent < 0:
            raise ValueError("Negative powers of CycloNumbers are not "
                             "supported")
        result = CycloNumber.one(self.order)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def conjugate(self):
        """Complex conjugate: zeta^k -> zeta^(-k)."""
        lifted = [0] * self.order
        for k, c in enumerate(self.coeffs):
            lifted[-k % self.order] += c
        return CycloNumber(self.order, lifted)

    # Comparison

    def __eq__(self, other):
        if isinstance(other, CycloNumber):
            if other.order != self.order:
                common = core.lcm(self.order, other.order)
                return (self.promote(common).coeffs
                        == other.promote(common).coeffs)
            return self.coeffs == other.coeffs
        if _is_scalar(other):
            return self.is_rational() and self.coeffs[0] == other
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    __hash__ = None

    def __repr__(self):
        return "CycloNumber(%d, [%s])" % (
            self.order, ", ".join(str(c) for c in self.coeffs))

    def __str__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                terms.append(str(c))
                continue
            zeta = "z%d" % self.order if k == 1 else "z%d^%d" % (self.order, k)
            if c == 1:
                terms.append(zeta)
            elif c == -1:
                terms.append("-" + zeta)
            else:
                terms.append("%s*%s" % (c, zeta))
        return " + ".join(terms).replace("+ -", "- ") or "0"


def root_of_unity_power(order, k):
    """zeta_N^(k mod N) in canonical form."""
    k %= order
    return CycloNumber(order, [0] * k + [1])


def cyclo_sum(values, order):
    """Exact sum of CycloNumbers; the empty sum is zero of `order`."""
    total = CycloNumber.zero(order)
    for value in values:
        total = total + value
    return total
