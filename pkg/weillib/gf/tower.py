"""Extension towers F_{q^s} / F_q with an explicit embedding of the base."""
from __future__ import absolute_import, division, print_function

import functools
import logging

from .. import params
from .field import FieldSpec


class TowerContext(object):
    """F_{q^s} built as GF(p^(e*s)) together with an embedding of F_q.

    The base field's representation generator x is sent to `base_image`, the
    smallest root (by element code) of the base modulus inside the big field.
    """

    def __init__(self, base, s):
        s = int(s)
        if s < 1:
            raise ValueError("Extension degree s must be at least 1; got %d"
                             % s)
        self.base = base
        self.ext_degree = s
        self.big = FieldSpec(base.p, base.e * s)
        self.base_image = _smallest_root(base.modulus, self.big)
        powers = [self.big.one]
        for _i in range(1, base.e):
            powers.append(powers[-1] * self.base_image)
        self._image_powers = tuple(powers)
        self._preimage = None

    @property
    def s(self):
        return self.ext_degree

    @property
    def q(self):
        return self.base.q

    @property
    def size(self):
        """Number of elements of F_{q^s}."""
        return self.big.q

    def __eq__(self, other):
        return (isinstance(other, TowerContext) and self.base == other.base
                and self.ext_degree == other.ext_degree)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.base, self.ext_degree))

    def __repr__(self):
        return "TowerContext(%s, s=%d)" % (self.base, self.ext_degree)

    def embed(self, c):
        """Map a base-field element (or int constant) into the big field."""
        c = self.base.element(c)
        result = self.big.zero
        for coeff, power in zip(c.coeffs, self._image_powers):
            if coeff:
                result = result + coeff * power
        return result

    def embed_poly(self, coeffs):
        return tuple(self.embed(c) for c in coeffs)

    def evaluate(self, coeffs, gamma):
        """f(gamma) for f over the base field and gamma in the big field."""
        result = self.big.zero
        for c in reversed(coeffs):
            result = result * gamma + self.embed(c)
        return result

    def preimage(self):
        """Dict from embedded big-field element to its base-field element."""
        if self._preimage is None:
            self._preimage = {self.embed(c): c for c in self.base.elements()}
        return self._preimage


@functools.lru_cache(maxsize=params.FIELD_CACHE_SIZE)
def build_tower(base, s):
    """Construct (and cache) the tower F_{q^s} over `base`."""
    ctx = TowerContext(base, s)
    logging.debug("Built %s: big field %s, base generator -> %r",
                  ctx, ctx.big, ctx.base_image)
    return ctx


def _smallest_root(modulus, big):
    """Smallest element of `big` (by code) annihilated by `modulus`, whose
    coefficients are prime-field residues."""
    for candidate in big.elements():
        value = big.zero
        for c in reversed(modulus):
            value = value * candidate + c
        if value.is_zero():
            return candidate
    raise RuntimeError("Modulus %r has no root in %s" % (modulus, big))


def frobenius(ctx, c, k=1):
    """c^(q^k) in the big field."""
    return c ** (ctx.q ** k)


def in_base(ctx, c):
    """True iff c lies in the embedded base field (is fixed by c -> c^q)."""
    return frobenius(ctx, c) == c


def pullback(ctx, c):
    """The base-field element whose embedding is c."""
    try:
        return ctx.preimage()[c]
    except KeyError:
        raise ValueError("%r is not in the embedded base field %s"
                         % (c, ctx.base))


def trace_rel(ctx, c, t=1):
    """Relative trace from F_{q^s} down to F_{q^t}, t | s.

    Returns c + c^(q^t) + c^(q^(2t)) + ... + c^(q^(s-t)). F_{q^t} is
    represented as the subfield of the big field fixed by the q^t-power
    Frobenius, so the result is a big-field element, checked to be fixed.
    For t = 1 use `trace_to_base`, which pulls the value back to the base
    field.
    """
    s = ctx.ext_degree
    if t < 1 or s % t:
        raise ValueError("Trace target degree %d does not divide s = %d"
                         % (t, s))
    c = ctx.big.element(c)
    step = ctx.q ** t
    total = ctx.big.zero
    term = c
    for _i in range(s // t):
        total = total + term
        term = term ** step
    if total ** step != total:
        raise RuntimeError("Trace of %r is not fixed by Frobenius" % c)
    return total


def trace_to_base(ctx, c):
    """Tr_{F_{q^s}/F_q}(c) as a base-field element."""
    return pullback(ctx, trace_rel(ctx, c, 1))


def norm_rel(ctx, c):
    """Norm_{F_{q^s}/F_q}(c) = c^((q^s - 1)/(q - 1)) as a base-field element;
    the norm of zero is zero."""
    c = ctx.big.element(c)
    if c.is_zero():
        return ctx.base.zero
    return pullback(ctx, c ** ((ctx.size - 1) // (ctx.q - 1)))
