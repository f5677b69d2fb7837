"""Exact arithmetic in GF(p^e), with elements in a polynomial basis.

An element is stored as its e residues (ascending powers of x) modulo the
field's monic irreducible modulus. Elements are also identified by an
integer *code*, the coefficient tuple read as a base-p number with the
constant term least significant; codes give the canonical element order
used for every "smallest" tie-break in this package.
"""
from __future__ import absolute_import, division, print_function

import itertools
import numbers

from .. import core


class FieldSpec(object):
    """A finite field GF(p^e) presented as GF(p)[x] / (modulus).

    Parameters
    ----------
    p : int
        The characteristic; must be prime.
    e : int
        Extension degree over GF(p), at least 1.
    modulus : sequence of int, optional
        Monic irreducible polynomial of degree e over GF(p), as ascending
        coefficients. Defaults to the canonical (smallest) one; degree-1
        fields use the polynomial x so all code paths are uniform.
    """

    def __init__(self, p, e=1, modulus=None):
        p, e = int(p), int(e)
        if not core.is_prime(p):
            raise ValueError("Characteristic must be prime; got %d" % p)
        if e < 1:
            raise ValueError("Extension degree must be at least 1; got %d" % e)
        if modulus is None:
            modulus = irreducible_coeffs(p, e)
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != e + 1 or modulus[-1] != 1:
            raise ValueError("Modulus of GF(%d^%d) must be monic of degree %d; "
                             "got %r" % (p, e, e, modulus))
        if e > 1 and not is_irreducible(modulus, p):
            raise ValueError("Modulus %r is reducible over GF(%d)"
                             % (modulus, p))
        self.p = p
        self.e = e
        self.modulus = modulus

    @property
    def q(self):
        return self.p ** self.e

    def __eq__(self, other):
        return (isinstance(other, FieldSpec)
                and (self.p, self.e, self.modulus)
                == (other.p, other.e, other.modulus))

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.p, self.e, self.modulus))

    def __repr__(self):
        return "FieldSpec(%d, %d, %r)" % (self.p, self.e, self.modulus)

    def __str__(self):
        if self.e == 1:
            return "GF(%d)" % self.p
        return "GF(%d^%d)" % (self.p, self.e)

    def to_dict(self):
        return {"p": self.p, "e": self.e, "modulus": list(self.modulus)}

    # Element construction

    def element(self, value):
        """Coerce an int (prime-field constant), coefficient sequence or
        FieldElement of this field into a FieldElement."""
        if isinstance(value, FieldElement):
            if value.owner != self:
                raise ValueError("Element of %s is not in %s"
                                 % (value.owner, self))
            return value
        if isinstance(value, numbers.Integral):
            return FieldElement(self, (value,) + (0,) * (self.e - 1))
        coeffs = tuple(value)
        if len(coeffs) > self.e:
            raise ValueError("Too many coefficients for %s: %r"
                             % (self, coeffs))
        return FieldElement(self, coeffs + (0,) * (self.e - len(coeffs)))

    def from_code(self, code):
        """The element whose base-p digits (constant term first) are `code`."""
        if not 0 <= code < self.q:
            raise ValueError("Element code %d out of range for %s"
                             % (code, self))
        coeffs = []
        for _i in range(self.e):
            code, digit = divmod(code, self.p)
            coeffs.append(digit)
        return FieldElement(self, coeffs)

    @property
    def zero(self):
        return self.element(0)

    @property
    def one(self):
        return self.element(1)

    @property
    def x(self):
        """The class of x, i.e. the canonical generator of the representation
        (zero in a degree-1 field, whose modulus is x)."""
        return FieldElement(self, self._reduce([0, 1]))

    def elements(self):
        """All q elements in ascending code order."""
        for code in range(self.q):
            yield self.from_code(code)

    def nonzero_elements(self):
        for code in range(1, self.q):
            yield self.from_code(code)

    # Arithmetic on coefficient tuples

    def _reduce(self, coeffs):
        """Reduce a coefficient list of any length modulo (p, modulus)."""
        p, e, mod = self.p, self.e, self.modulus
        coeffs = [c % p for c in coeffs]
        for top in range(len(coeffs) - 1, e - 1, -1):
            lead = coeffs[top]
            if lead:
                shift = top - e
                for j in range(e):
                    coeffs[shift + j] = (coeffs[shift + j] - lead * mod[j]) % p
                coeffs[top] = 0
        coeffs = coeffs[:e]
        return tuple(coeffs) + (0,) * (e - len(coeffs))

    def _mul(self, left, right):
        prod = [0] * (2 * self.e - 1)
        for i, a_i in enumerate(left):
            if a_i:
                for j, b_j in enumerate(right):
                    prod[i + j] += a_i * b_j
        return self._reduce(prod)



class FieldElement(object):
    """An element of a FieldSpec, immutable and hashable.

    Arithmetic accepts plain ints as prime-field constants, so `3 * c` is
    c added to itself three times.
    """
    __slots__ = ('owner', 'coeffs')

    def __init__(self, owner, coeffs):
        coeffs = tuple(int(c) % owner.p for c in coeffs)
        if len(coeffs) != owner.e:
            raise ValueError("Elements of %s need exactly %d coefficients; "
                             "got %r" % (owner, owner.e, coeffs))
        self.owner = owner
        self.coeffs = coeffs

    @property
    def code(self):
        code = 0
        for c in reversed(self.coeffs):
            code = code * self.owner.p + c
        return code

    def __int__(self):
        return self.code

    def is_zero(self):
        return not any(self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    __nonzero__ = __bool__

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.owner == other.owner and self.coeffs == other.coeffs
        if isinstance(other, numbers.Integral):
            return self == self.owner.element(other)
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __lt__(self, other):
        return self.code < self._coerce(other).code

    def __hash__(self):
        return hash((self.owner, self.coeffs))

    def __repr__(self):
        return "%s(%s)" % (self.owner, ":".join(map(str, self.coeffs)))

    def __str__(self):
        terms = []
        for power in range(self.owner.e - 1, -1, -1):
            c = self.coeffs[power]
            if not c:
                continue
            if power == 0:
                terms.append(str(c))
            else:
                var = "x" if power == 1 else "x^%d" % power
                terms.append(var if c == 1 else "%d%s" % (c, var))
        return " + ".join(terms) or "0"

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.owner != self.owner:
                raise ValueError("Cannot combine elements of different fields:"
                                 " %s and %s" % (self.owner, other.owner))
            return other
        if isinstance(other, numbers.Integral):
            return self.owner.element(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.owner.p
        return FieldElement(self.owner, [(a + b) % p for a, b in
                                         zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.owner, [-a for a in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.owner,
                            self.owner._mul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("Cannot invert zero in %s" % self.owner)
        return self ** (self.owner.q - 2)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    __div__ = __truediv__

    def __pow__(self, exponent):
        """Square-and-multiply; negative exponents invert first."""
        exponent = int(exponent)
        base = self
        if exponent < 0:
            base = base.inverse()
            exponent = -exponent
        result = self.owner.one
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result


def absolute_trace(c):
    """Absolute trace Tr: GF(q) -> GF(p), as a residue in [0, p).

    Tr(c) = c + c^p + c^(p^2) + ... + c^(p^(e-1)).
    """
    spec = c.owner
    total = spec.zero
    term = c
    for _i in range(spec.e):
        total = total + term
        term = term ** spec.p
    if any(total.coeffs[1:]):
        raise ValueError("Trace of %r left the prime field: %r" % (c, total))
    return total.coeffs[0]


# __________________________________________________________________________
# Polynomials over GF(p) as tuples of ints (for choosing moduli)

def _poly_rem_p(num, den, p):
    """Remainder of num / den over GF(p); den must be monic."""
    num = [c % p for c in num]
    dlen = len(den)
    for top in range(len(num) - 1, dlen - 2, -1):
        lead = num[top]
        if lead:
            shift = top - dlen + 1
            for j in range(dlen):
                num[shift + j] = (num[shift + j] - lead * den[j]) % p
    rem = num[:dlen - 1]
    while rem and not rem[-1]:
        rem.pop()
    return rem


def _monic_polys_p(p, degree):
    """All monic polynomials of the given degree over GF(p), in code order."""
    for lower in itertools.product(range(p), repeat=degree):
        # itertools varies the last position fastest; constant term first
        # must vary fastest for code order
        yield tuple(reversed(lower)) + (1,)


def is_irreducible(coeffs, p):
    """Trial division by every monic polynomial of degree <= deg/2."""
    degree = len(coeffs) - 1
    if degree < 1:
        return False
    if degree == 1:
        return True
    if coeffs[0] % p == 0:
        return False
    for div_degree in range(1, degree // 2 + 1):
        for divisor in _monic_polys_p(p, div_degree):
            if not _poly_rem_p(coeffs, divisor, p):
                return False
    return True


def irreducible_coeffs(p, e):
    """The smallest (by code) monic irreducible polynomial of degree e over
    GF(p), as ascending coefficients. Degree 1 gives x."""
    if e == 1:
        return (0, 1)
    for candidate in _monic_polys_p(p, e):
        if is_irreducible(candidate, p):
            return candidate
    raise RuntimeError("No irreducible polynomial of degree %d over GF(%d)"
                       % (e, p))


def parse_element(field, text):
    """Element from text: an integer code ("5") or a colon-separated
    ascending coefficient tuple ("0:1" is x)."""
    text = str(text).strip()
    try:
        if ":" in text:
            return field.element([int(c) for c in text.split(":")])
        return field.from_code(int(text))
    except ValueError as exc:
        raise ValueError("Bad element %r for %s: %s" % (text, field, exc))
