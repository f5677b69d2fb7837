"""Polynomials over a FieldSpec.

General polynomials are plain tuples of FieldElements in ascending powers
with no trailing zeros; monic polynomials, the objects the multiplicative
machinery enumerates, get their own class.
"""
from __future__ import absolute_import, division, print_function

import itertools

from .field import FieldSpec, irreducible_coeffs, parse_element


class MonicPoly(object):
    """A monic polynomial a_0 + a_1 x + ... + x^k over `owner`.

    The signed coefficients c_j = (-1)^j a_{k-j} follow the convention
    g(x) = sum_j (-1)^j c_j x^(k-j), so c_0 = 1 and c_j is the j-th
    elementary symmetric function of the roots.
    """
    __slots__ = ('owner', 'coeffs')

    def __init__(self, owner, coeffs):
        coeffs = tuple(owner.element(c) for c in coeffs)
        if not coeffs or coeffs[-1] != owner.one:
            raise ValueError("Polynomial %s is not monic over %s"
                             % (_format_coeffs(coeffs), owner))
        self.owner = owner
        self.coeffs = coeffs

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def code(self):
        """Index in enumeration order: lower coefficients as base-q digits."""
        code = 0
        for c in reversed(self.coeffs[:-1]):
            code = code * self.owner.q + c.code
        return code

    def signed_coeffs(self):
        """[c_0, c_1, ..., c_k] with c_j = (-1)^j a_{k-j}."""
        k = self.degree
        return [self.coeffs[k - j] if j % 2 == 0 else -self.coeffs[k - j]
                for j in range(k + 1)]

    def __call__(self, x):
        return evaluate(self.coeffs, x)

    def __mul__(self, other):
        if not isinstance(other, MonicPoly):
            return NotImplemented
        if other.owner != self.owner:
            raise ValueError("Cannot multiply polynomials over %s and %s"
                             % (self.owner, other.owner))
        return MonicPoly(self.owner, poly_mul(self.coeffs, other.coeffs))

    def __pow__(self, exponent):
        result = MonicPoly(self.owner, [1])
        for _i in range(exponent):
            result = result * self
        return result

    def __eq__(self, other):
        return (isinstance(other, MonicPoly) and self.owner == other.owner
                and self.coeffs == other.coeffs)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.owner, self.coeffs))

    def __repr__(self):
        return "MonicPoly(%s, [%s])" % (self.owner, _format_coeffs(self.coeffs))

    def __str__(self):
        return format_poly(self.coeffs)

    def is_irreducible(self):
        """Trial division by every monic polynomial of degree <= k/2."""
        k = self.degree
        if k < 1:
            return False
        if k == 1:
            return True
        if self.coeffs[0].is_zero():
            return False
        for div_degree in range(1, k // 2 + 1):
            for divisor in enumerate_monic(self.owner, div_degree):
                if not any(poly_rem(self.coeffs, divisor.coeffs)):
                    return False
        return True


def coerce_poly(field, coeffs):
    """Coerce ascending coefficients to a tuple of field elements, with
    trailing zeros stripped (the zero polynomial is the empty tuple)."""
    elems = [field.element(c) for c in coeffs]
    while elems and elems[-1].is_zero():
        elems.pop()
    return tuple(elems)


def degree(coeffs):
    """Degree of a stripped coefficient tuple; -1 for the zero polynomial."""
    return len(coeffs) - 1


def evaluate(coeffs, x):
    """Horner evaluation; `x` may live in the coefficients' field."""
    result = x.owner.zero if hasattr(x, 'owner') else 0
    for c in reversed(coeffs):
        result = result * x + c
    return result


def poly_mul(left, right):
    prod = [None] * (len(left) + len(right) - 1)
    for i, a_i in enumerate(left):
        for j, b_j in enumerate(right):
            term = a_i * b_j
            prod[i + j] = term if prod[i + j] is None else prod[i + j] + term
    return prod


def poly_rem(num, den):
    """Remainder of num / den where den is monic; FieldElement coefficients."""
    num = list(num)
    dlen = len(den)
    for top in range(len(num) - 1, dlen - 2, -1):
        lead = num[top]
        if not lead.is_zero():
            shift = top - dlen + 1
            for j in range(dlen):
                num[shift + j] = num[shift + j] - lead * den[j]
    return num[:dlen - 1]


def enumerate_monic(field, k):
    """All q^k monic polynomials of degree k over `field`, by ascending code."""
    elements = list(field.elements())
    for lower in itertools.product(elements, repeat=k):
        yield MonicPoly(field, tuple(reversed(lower)) + (field.one,))


def enumerate_irreducible(field, k):
    """Monic irreducible polynomials of degree k, by ascending code."""
    for poly in enumerate_monic(field, k):
        if poly.is_irreducible():
            yield poly


def find_irreducible(p, e):
    """The canonical modulus of GF(p^e) as a MonicPoly over GF(p).

    That is the monic irreducible of degree e whose coefficient tuple, read
    as a base-p integer with the constant term least significant, is
    smallest; degree 1 gives x.
    """
    return MonicPoly(FieldSpec(p), irreducible_coeffs(p, e))


def format_poly(coeffs, var="x"):
    """Human-readable text, highest power first, e.g. "x^3 + (0:1)x + 2"."""
    terms = []
    for power in range(len(coeffs) - 1, -1, -1):
        c = coeffs[power]
        if c.is_zero():
            continue
        if c.owner.e == 1:
            ctext = str(c.coeffs[0])
        else:
            ctext = "(%s)" % ":".join(map(str, c.coeffs))
        if power == 0:
            terms.append(ctext)
            continue
        xtext = var if power == 1 else "%s^%d" % (var, power)
        terms.append(xtext if c == c.owner.one else ctext + xtext)
    return " + ".join(terms) or "0"


def _format_coeffs(coeffs):
    return ", ".join(repr(c) for c in coeffs)


def parse_poly(field, text):
    """Polynomial from comma-separated ascending coefficients, each in the
    element syntax of `parse_element` ("0,1,0,1" is x^3 + x)."""
    parts = [part for part in str(text).split(",") if part.strip()]
    if not parts:
        raise ValueError("Empty polynomial %r" % text)
    return coerce_poly(field, [parse_element(field, part) for part in parts])
