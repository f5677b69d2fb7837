"""Symmetric functions: Newton's identities and Dickson polynomials.

Coefficients may live in any commutative ring whose elements support +, -
and * with each other and with ints: Fractions, CycloNumbers, FieldElements
or the symbolic MultiPoly defined here.
"""
from __future__ import absolute_import, division, print_function

import collections
import itertools
import math
import numbers
from fractions import Fraction

from . import params
from .gf.field import FieldElement

ELEMENTARY = "elementary"
POWER_SUM = "power-sum"


class SymCoeffs(object):
    """A list of elementary symmetric values e_1, e_2, ... or power sums
    p_1, p_2, ... of some `arity` underlying indeterminates.

    Elementary values beyond the arity are implicitly zero.
    """

    def __init__(self, kind, values, arity=None):
        if kind not in (ELEMENTARY, POWER_SUM):
            raise ValueError("Unknown symmetric-function kind %r" % kind)
        self.kind = kind
        self.values = list(values)
        self.arity = len(self.values) if arity is None else int(arity)

    def __len__(self):
        return len(self.values)

    def __getitem__(self, j):
        """1-based access; elementary values past the arity are zero."""
        if j < 1:
            raise IndexError("Symmetric functions are indexed from 1")
        if j <= len(self.values):
            return self.values[j - 1]
        if self.kind == ELEMENTARY and j > self.arity:
            return 0
        raise IndexError("%s value %d is not available (have %d)"
                         % (self.kind, j, len(self.values)))

    def __eq__(self, other):
        return (isinstance(other, SymCoeffs) and self.kind == other.kind
                and self.values == other.values)

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return "SymCoeffs(%r, %r, arity=%d)" % (self.kind, self.values,
                                                self.arity)


def _divide(value, m):
    """Exact division of a ring element by a positive integer."""
    if isinstance(value, numbers.Integral):
        return Fraction(value, m)
    if isinstance(value, FieldElement) and m % value.owner.p == 0:
        raise ValueError("Cannot divide by %d in characteristic %d"
                         % (m, value.owner.p))
    return value / m


def newton_p_from_e(elem, m):
    """Power sums p_1..p_m from elementary values.

    p_n = sum_{j=1}^{n-1} (-1)^(j-1) e_j p_(n-j) + (-1)^(n-1) n e_n
    """
    if elem.kind != ELEMENTARY:
        raise ValueError("Expected elementary values, got %s" % elem.kind)
    power = []
    for n in range(1, m + 1):
        total = n * elem[n]
        if n % 2 == 0:
            total = -total
        for j in range(1, n):
            e_j = elem[j]
            if isinstance(e_j, numbers.Integral) and e_j == 0:
                continue
            term = e_j * power[n - j - 1]
            total = total + term if j % 2 else total - term
        power.append(total)
    return SymCoeffs(POWER_SUM, power, elem.arity)


def newton_e_from_p(power, m=None):
    """Elementary values e_1..e_m from power sums, solving
    m e_m = sum_{j=1}^{m} (-1)^(j-1) e_(m-j) p_j  with e_0 = 1.
    """
    if power.kind != POWER_SUM:
        raise ValueError("Expected power sums, got %s" % power.kind)
    m = len(power) if m is None else m
    elem = []
    for n in range(1, m + 1):
        total = power[n]
        if n % 2 == 0:
            total = -total
        for j in range(1, n):
            term = elem[n - j - 1] * power[j]
            total = total + term if j % 2 else total - term
        elem.append(_divide(total, n))
    return SymCoeffs(ELEMENTARY, elem, power.arity)


# __________________________________________________________________________
# Determinant forms

def determinant(matrix):
    """Cofactor expansion along the first row, skipping integer zeros."""
    size = len(matrix)
    if size == 1:
        return matrix[0][0]
    total = None
    for col, entry in enumerate(matrix[0]):
        if isinstance(entry, numbers.Integral) and entry == 0:
            continue
        minor = [row[:col] + row[col + 1:] for row in matrix[1:]]
        term = entry * determinant(minor)
        if col % 2:
            term = -term
        total = term if total is None else total + term
    return 0 if total is None else total


def _p_matrix(elem, m):
    """Hessenberg matrix whose determinant is p_m: first column i e_i,
    column j >= 2 holds e_(i-j+1) with e_0 = 1."""
    rows = []
    for i in range(1, m + 1):
        row = [i * elem[i]]
        for j in range(2, m + 1):
            idx = i - j + 1
            row.append(1 if idx == 0 else (elem[idx] if idx > 0 else 0))
        rows.append(row)
    return rows


def _e_matrix(power, m):
    """Hessenberg matrix whose determinant is m! e_m: first column p_i,
    superdiagonal i, below it p_(i-j+1)."""
    rows = []
    for i in range(1, m + 1):
        row = [power[i]]
        for j in range(2, m + 1):
            idx = i - j + 1
            if idx == 0:
                row.append(i)
            elif idx > 0:
                row.append(power[idx])
            else:
                row.append(0)
        rows.append(row)
    return rows


def det_cross_check(values, m=None):
    """Convert between elementary values and power sums via determinants.

    Elementary input yields power sums, power-sum input yields elementary
    values; the results agree with the iterative Newton conversions.
    """
    m = len(values) if m is None else m
    if m > params.DET_MAX_ORDER:
        raise ValueError("Determinant forms are limited to m <= %d; got %d"
                         % (params.DET_MAX_ORDER, m))
    if values.kind == ELEMENTARY:
        return SymCoeffs(POWER_SUM,
                         [determinant(_p_matrix(values, n))
                          for n in range(1, m + 1)], values.arity)
    return SymCoeffs(ELEMENTARY,
                     [_divide(determinant(_e_matrix(values, n)),
                              math.factorial(n))
                      for n in range(1, m + 1)], values.arity)


# __________________________________________________________________________
# Dickson polynomials of the first kind

DicksonInput = collections.namedtuple('DicksonInput', 'k x a n')


def _check_dickson(inp):
    if inp.k < 1:
        raise ValueError("Dickson arity k must be at least 1; got %d" % inp.k)
    if len(inp.x) != inp.k:
        raise ValueError("Expected %d values x_1..x_k, got %d"
                         % (inp.k, len(inp.x)))
    if inp.n < 0:
        raise ValueError("Dickson index must be non-negative; got %d" % inp.n)
    return list(inp.x) + [inp.a]


def dickson_initial_values(inp):
    """D_0 .. D_k, with D_0 = k + 1 and
    D_j = sum_{t=1}^{j} (-1)^(t-1) x_t D_(j-t) + (-1)^j (k+1-j) x_j.
    """
    xs = _check_dickson(inp)
    k = inp.k
    values = [inp.a * 0 + (k + 1)]
    for j in range(1, k + 1):
        total = (k + 1 - j) * xs[j - 1]
        if j % 2:
            total = -total
        for t in range(1, j + 1):
            term = xs[t - 1] * values[j - t]
            total = total + term if t % 2 else total - term
        values.append(total)
    return values


def dickson_d1_recurrence(inp):
    """D_n^(1)(x_1..x_k, a) by the order-(k+1) linear recurrence
    D_N = sum_{t=1}^{k+1} (-1)^(t-1) x_t D_(N-t), with x_(k+1) = a."""
    xs = _check_dickson(inp)
    values = dickson_initial_values(inp)
    order = inp.k + 1
    while len(values) <= inp.n:
        nxt = len(values)
        total = None
        for t in range(1, order + 1):
            term = xs[t - 1] * values[nxt - t]
            if t % 2 == 0:
                term = -term
            total = term if total is None else total + term
        values.append(total)
    return values[inp.n]


def _weighted_partitions(n, weights):
    """Exponent tuples r with sum(w * r_w) == n over the given weights."""
    if not weights:
        if n == 0:
            yield ()
        return
    weight = weights[0]
    for count in range(n // weight + 1):
        for rest in _weighted_partitions(n - count * weight, weights[1:]):
            yield (count,) + rest


def dickson_d1_waring(inp):
    """D_n^(1) from Waring's explicit formula.

    D_n = sum over r_1 + 2 r_2 + ... + (k+1) r_(k+1) = n of
    (-1)^(n - R) n (R-1)! / (r_1! ... r_(k+1)!) x_1^r_1 ... a^r_(k+1),
    where R = r_1 + ... + r_(k+1). The prefactors are integers computed
    before any reduction.
    """
    xs = _check_dickson(inp)
    n = inp.n
    if n < 1:
        raise ValueError("Waring's formula needs n >= 1; got %d" % n)
    total = None
    for exps in _weighted_partitions(n, list(range(1, inp.k + 2))):
        count = sum(exps)
        coeff = Fraction(n * math.factorial(count - 1))
        for r in exps:
            coeff /= math.factorial(r)
        if coeff.denominator != 1:
            raise ArithmeticError("Non-integral Waring coefficient %s"
                                  % coeff)
        coeff = coeff.numerator
        if (n - count) % 2:
            coeff = -coeff
        term = None
        for x_i, r in zip(xs, exps):
            if r:
                factor = x_i ** r
                term = factor if term is None else term * factor
        term = coeff * term
        total = term if total is None else total + term
    return total


def dickson_d1_series(inp, count):
    """[D_0, ..., D_count] from the generating function
    sum_i (k+1-i) (-1)^i x_i z^i / sum_i (-1)^i x_i z^i  (x_0 = 1)."""
    xs = [1] + _check_dickson(inp)
    order = inp.k + 1
    values = []
    for n in range(count + 1):
        total = inp.a * 0
        if n <= order:
            num = (order - n) * xs[n]
            total = total + (-num if n % 2 else num)
        for i in range(1, min(n, order) + 1):
            term = xs[i] * values[n - i]
            total = total + term if i % 2 else total - term
        values.append(total)
    return values


def root_polynomial(x, a):
    """Ascending coefficients of y^(k+1) - x_1 y^k + x_2 y^(k-1) - ...
    + (-1)^(k+1) a, whose roots' power sums are D_n^(1)(x, a)."""
    elem = list(x) + [a]
    top = len(elem)
    coeffs = [0] * (top + 1)
    coeffs[top] = 1
    for i, value in enumerate(elem, 1):
        coeffs[top - i] = -value if i % 2 else value
    return coeffs


def _fraction_det(matrix):
    """Exact determinant by Gaussian elimination over the rationals."""
    matrix = [[Fraction(v) for v in row] for row in matrix]
    size = len(matrix)
    det = Fraction(1)
    for col in range(size):
        pivot = next((r for r in range(col, size) if matrix[r][col]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            matrix[col], matrix[pivot] = matrix[pivot], matrix[col]
            det = -det
        det *= matrix[col][col]
        for r in range(col + 1, size):
            factor = matrix[r][col] / matrix[col][col]
            if factor:
                for c in range(col, size):
                    matrix[r][c] -= factor * matrix[col][c]
    return det


def _mat_mul(left, right):
    return [[sum(left[i][t] * right[t][j] for t in range(len(right)))
             for j in range(len(right[0]))] for i in range(len(left))]


def lift_roots_power(coeffs, n):
    """r_n(x) = prod (x - beta^n) over the roots beta of a monic r.

    r_n is the characteristic polynomial of C^n, C the companion matrix of
    r; it is found exactly by evaluating det(x I - C^n) at the integer
    points 0..d and interpolating. Returns ascending Fraction coefficients.
    """
    coeffs = [Fraction(c) for c in coeffs]
    while len(coeffs) > 1 and not coeffs[-1]:
        coeffs.pop()
    deg = len(coeffs) - 1
    if coeffs[-1] != 1:
        raise ValueError("Polynomial must be monic")
    if not 1 <= deg <= params.LIFT_MAX_DEGREE:
        raise ValueError("Root lifting needs degree in [1, %d]; got %d"
                         % (params.LIFT_MAX_DEGREE, deg))
    if n < 1:
        raise ValueError("Lifting power must be at least 1; got %d" % n)
    companion = [[Fraction(0)] * deg for _i in range(deg)]
    for i in range(1, deg):
        companion[i][i - 1] = Fraction(1)
    for i in range(deg):
        companion[i][deg - 1] = -coeffs[i]
    power = companion
    for _i in range(n - 1):
        power = _mat_mul(power, companion)
    points = list(range(deg + 1))
    values = []
    for x0 in points:
        shifted = [[(x0 if i == j else 0) - power[i][j] for j in range(deg)]
                   for i in range(deg)]
        values.append(_fraction_det(shifted))
    return _interpolate(points, values)


def _interpolate(points, values):
    """Lagrange interpolation; ascending Fraction coefficients."""
    size = len(points)
    result = [Fraction(0)] * size
    for i, (xi, yi) in enumerate(zip(points, values)):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, xj in enumerate(points):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for t in range(len(basis) - 1):
                basis[t] -= xj * basis[t + 1]
            denom *= xi - xj
        for t in range(size):
            result[t] += yi * basis[t] / denom
    return result


def lifted_dickson_coeffs(lifted):
    """[D^(1), ..., D^(d)] read from r_n = x^d - D^(1) x^(d-1) + ...;
    D^(i) = (-1)^i * (coefficient of x^(d-i))."""
    deg = len(lifted) - 1
    return [lifted[deg - i] if i % 2 == 0 else -lifted[deg - i]
            for i in range(1, deg + 1)]


# __________________________________________________________________________
# Symbolic polynomials for printing Dickson polynomials

class MultiPoly(object):
    """Sparse integer polynomial in named variables.

    Terms map exponent tuples (aligned with `names`) to nonzero ints.
    """
    __slots__ = ('names', 'terms')

    def __init__(self, names, terms=None):
        self.names = tuple(names)
        self.terms = {exps: coeff for exps, coeff in (terms or {}).items()
                      if coeff}

    @classmethod
    def variable(cls, names, index):
        exps = tuple(1 if i == index else 0 for i in range(len(names)))
        return cls(names, {exps: 1})

    @classmethod
    def constant(cls, names, value):
        return cls(names, {(0,) * len(names): int(value)})

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            if other.names != self.names:
                raise ValueError("Variable sets differ: %r vs %r"
                                 % (self.names, other.names))
            return other
        if isinstance(other, numbers.Integral):
            return MultiPoly.constant(self.names, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for exps, coeff in other.terms.items():
            terms[exps] = terms.get(exps, 0) + coeff
        return MultiPoly(self.names, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.names, {exps: -coeff for exps, coeff
                                      in self.terms.items()})

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
        terms = collections.defaultdict(int)
        for (exps1, c1), (exps2, c2) in itertools.product(
                self.terms.items(), other.terms.items()):
            terms[tuple(a + b for a, b in zip(exps1, exps2))] += c1 * c2
        return MultiPoly(self.names, terms)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        result = MultiPoly.constant(self.names, 1)
        for _i in range(int(exponent)):
            result = result * self
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.terms == other.terms

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    __hash__ = None

    def __repr__(self):
        return "MultiPoly(%r, %r)" % (self.names, self.terms)

    def __str__(self):
        """Terms by descending x-exponents, e.g. "x^5 - 5a x^3 + 5a^2 x".

        The first variable (a) is written before the others in each term.
        """
        if not self.terms:
            return "0"
        ordered = sorted(self.terms.items(),
                         key=lambda item: (item[0][1:], item[0][0]),
                         reverse=True)
        text = []
        for idx, (exps, coeff) in enumerate(ordered):
            factors = [name if power == 1 else "%s^%d" % (name, power)
                       for name, power in zip(self.names, exps) if power]
            magnitude = abs(coeff)
            if not factors:
                body = str(magnitude)
            elif magnitude == 1:
                body = " ".join(factors)
            else:
                body = str(magnitude) + " ".join(factors)
            if idx == 0:
                text.append("-" + body if coeff < 0 else body)
            else:
                text.append(("- " if coeff < 0 else "+ ") + body)
        return " ".join(text)


def dickson_names(k):
    """Variable names for arity k: ('a', 'x') or ('a', 'x1', ..., 'xk')."""
    if k == 1:
        return ('a', 'x')
    return ('a',) + tuple("x%d" % i for i in range(1, k + 1))


def dickson_symbolic(k, n, method="recurrence"):
    """D_n^(1) as a MultiPoly in a and x_1..x_k."""
    names = dickson_names(k)
    a = MultiPoly.variable(names, 0)
    xs = [MultiPoly.variable(names, i) for i in range(1, k + 1)]
    inp = DicksonInput(k, xs, a, n)
    if method == "recurrence":
        return dickson_d1_recurrence(inp)
    if method == "waring":
        return dickson_d1_waring(inp)
    if method == "series":
        return dickson_d1_series(inp, n)[n]
    raise ValueError("Unknown Dickson evaluation method %r" % method)
