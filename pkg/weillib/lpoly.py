"""L-polynomials of character sums.

A multiplicative function lambda on monic polynomials over F_q defines the
series L(z) = sum_k (sum over monic g of degree k of lambda(g)) z^k. For
the lambda built from (u, a, b, chi) the series is a polynomial of degree
u + 1, L(z) = prod (1 - w_i z), and the sums over extensions satisfy
G_u^(s)(a, b) = -(w_1^s + ... + w_(u+1)^s). This module builds L both by
enumeration and from brute-force sums, predicts sums through Newton's
identities and checks the root bounds.
"""
from __future__ import absolute_import, division, print_function

import collections
import logging
import math

import numpy as np

from . import core, params, roots
from .charsum import (SumSeries, additive_character, g_sum, gauss_quadratic,
                      generalized_sum, mult_sum_T, quadratic_character,
                      weil_sum_S)
from .cyclo import CycloNumber
from .gf.field import absolute_trace
from .gf.poly import (coerce_poly, enumerate_irreducible, enumerate_monic,
                      format_poly)
from .reports import SuiteResult, bound_verdict, exact_verdict, verdict
from .symfun import (ELEMENTARY, POWER_SUM, DicksonInput, SymCoeffs,
                     dickson_d1_recurrence, newton_e_from_p, newton_p_from_e)


# __________________________________________________________________________
# lambda and its coefficient sums

def _lambda_argument(g, u, a, b):
    """a p_u + b c_(k-1) / c_k for monic g, or None when c_k = 0.

    p_u is the u-th power sum of the roots of g, computed from the signed
    coefficients c_j with Newton's identities inside F_q.
    """
    signed = g.signed_coeffs()
    k = g.degree
    if signed[k].is_zero():
        return None
    elem = SymCoeffs(ELEMENTARY, signed[1:], k)
    p_u = newton_p_from_e(elem, u)[u]
    return a * p_u + b * signed[k - 1] / signed[k]


def lambda_eval(g, u, a, b, chi):
    """lambda(g) = chi(a p_u + b c_(k-1) c_k^-1), 0 if c_k = 0, lambda(1) = 1."""
    field = chi.field
    order = chi.value_order
    if g.owner != field:
        raise ValueError("Polynomial over %s, character over %s"
                         % (g.owner, field))
    if g.degree == 0:
        return CycloNumber.one(order)
    arg = _lambda_argument(g, u, field.element(a), field.element(b))
    if arg is None:
        return CycloNumber.zero(order)
    return chi(arg)


def phi_k_sum(k, u, a, b, chi, bound=None):
    """Sum of lambda(g) over all q^k monic g of degree k."""
    field = chi.field
    core.check_enum_bound(field.q ** k, bound,
                          "monic polynomials of degree %d" % k)
    if k == 0:
        return CycloNumber.one(field.p)
    a, b = field.element(a), field.element(b)
    twist = chi.parameter
    counts = np.zeros(field.p, dtype=np.int64)
    for g in enumerate_monic(field, k):
        arg = _lambda_argument(g, u, a, b)
        if arg is not None:
            counts[absolute_trace(twist * arg)] += 1
    return CycloNumber.from_counts(field.p, counts)


class LPolynomial(object):
    """L(z) = A_0 + A_1 z + ... + A_t z^t with A_0 = 1.

    `context` records what the polynomial was built from.
    """

    def __init__(self, coeffs, context=None):
        coeffs = list(coeffs)
        if not coeffs or coeffs[0] != 1:
            raise ValueError("L-polynomials have constant term 1; got %s"
                             % (coeffs[0] if coeffs else "nothing"))
        self.coeffs = coeffs
        self.context = dict(context or {})

    @property
    def degree(self):
        """Index of the last nonzero coefficient."""
        for idx in range(len(self.coeffs) - 1, -1, -1):
            if self.coeffs[idx] != 0:
                return idx
        return 0

    def __getitem__(self, j):
        return self.coeffs[j] if j < len(self.coeffs) else 0

    def __eq__(self, other):
        if not isinstance(other, LPolynomial):
            return NotImplemented
        size = max(self.degree, other.degree) + 1
        return all(self[j] == other[j] for j in range(size))

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __repr__(self):
        return "LPolynomial([%s])" % ", ".join(map(str, self.coeffs))

    def elementary(self):
        """e_j of the inverse roots: e_j = (-1)^j A_j."""
        t = self.degree
        return SymCoeffs(ELEMENTARY,
                         [self[j] if j % 2 == 0 else -self[j]
                          for j in range(1, t + 1)], t)

    def complex_coeffs(self):
        return [complex(c) for c in self.coeffs[:self.degree + 1]]


def L_from_elementary(elem, context=None):
    """LPolynomial with A_j = (-1)^j e_j."""
    values = list(elem.values if isinstance(elem, SymCoeffs) else elem)
    return LPolynomial([1] + [v if j % 2 == 0 else -v
                              for j, v in enumerate(values, 1)], context)


def check_hypothesis(field, u, a, b):
    a, b = field.element(a), field.element(b)
    if a.is_zero():
        raise ValueError("The L-polynomial of G_u(a, b) requires a != 0")
    if u < 1:
        raise ValueError("Exponent u must be positive; got %d" % u)
    if math.gcd(u, field.q) != 1 and b.is_zero():
        raise ValueError("Need gcd(u, q) = 1 or b != 0; got u = %d, q = %d, "
                         "b = 0" % (u, field.q))
    return a, b


def has_root_bound(field, u, b):
    """True when every inverse root of L for G_u(a, b) (a != 0) has
    modulus sqrt(q): b != 0 and either gcd(u, q) = gcd(u + 1, q) = 1, or u = 1
    (Kloosterman sums), or u = 2 over a binary field."""
    b = field.element(b)
    if b.is_zero():
        return False
    if u == 1 or (u == 2 and field.p == 2):
        return True
    return math.gcd(u, field.p) == 1 and math.gcd(u + 1, field.p) == 1


def build_L(u, a, b, chi, verify=False, bound=None):
    """L(z) for G_u(a, b) by enumerating monic polynomials of degree
    0..u+1; with `verify`, also evaluate the degree u+2 sum, which must
    vanish (it is stored as context["tail"])."""
    field = chi.field
    a, b = check_hypothesis(field, u, a, b)
    coeffs = [phi_k_sum(k, u, a, b, chi, bound) for k in range(u + 2)]
    context = {"u": u, "a": a.code, "b": b.code, "field": field.to_dict(),
               "character": chi.to_dict()}
    if verify:
        tail = phi_k_sum(u + 2, u, a, b, chi, bound)
        context["tail"] = tail
        if not tail.is_zero():
            logging.warning("Degree-%d coefficient sum is %s, not 0",
                            u + 2, tail)
    return LPolynomial(coeffs, context)


# __________________________________________________________________________
# Sums <-> elementary values

def sums_to_elementary(series, t):
    """e_1..e_t of the inverse roots from sums at s = 1..t, using
    p_j(w) = -(sum at s = j)."""
    values = list(series)
    if len(values) < t:
        raise ValueError("Need %d sums to recover %d roots; have %d"
                         % (t, t, len(values)))
    power = SymCoeffs(POWER_SUM, [-v for v in values[:t]], t)
    return newton_e_from_p(power).values


def predict_sums(elem, seed, smax):
    """Extend `seed` (sums at s = 1..len(seed)) to s = smax by
    S_s = sum_{j=1}^{s-1} (-1)^(j-1) e_j S_(s-j) + (-1)^s s e_s,
    with e_j = 0 beyond the number of roots."""
    elem = list(elem)
    t = len(elem)
    values = list(seed)
    meta = dict(getattr(seed, "meta", {}))
    meta["predicted_from"] = len(values)
    while len(values) < smax:
        s = len(values) + 1
        total = s * elem[s - 1] if s <= t else 0
        if s % 2:
            total = -total
        for j in range(1, min(s - 1, t) + 1):
            term = elem[j - 1] * values[s - j - 1]
            total = total + term if j % 2 else total - term
        values.append(total)
    return SumSeries(meta, values[:smax])


# __________________________________________________________________________
# Roots

BoundReport = collections.namedtuple(
    'BoundReport', 'roots max_modulus expected within_bound all_on_circle '
    'product_ok tolerance')


def roots_and_bound(lpoly, expected_modulus, tol=params.MODULUS_TOL):
    """Inverse roots w_i of L (the roots of z^t L(1/z)) and the bound checks
    max |w_i| <= expected + tol, all |w_i| == expected within tol, and
    prod |w_i| == |A_t|."""
    t = lpoly.degree
    if t == 0:
        return BoundReport(roots.RootSet([], 0.0, params.ROOT_TOL, 0, True), 0.0,
                           expected_modulus, True, True, True, tol)
    rootset = roots.durand_kerner(lpoly.complex_coeffs(),
                                  radius=expected_modulus)
    moduli = np.abs(np.array(rootset.roots))
    max_modulus = float(moduli.max())
    product = float(np.prod(moduli))
    top = abs(complex(lpoly[t]))
    return BoundReport(
        rootset, max_modulus, expected_modulus,
        max_modulus <= expected_modulus + tol,
        bool(np.all(np.abs(moduli - expected_modulus) <= tol)),
        abs(product - top) <= params.ROOT_RESIDUAL_TOL * max(1.0, top),
        tol)


def bound_verdicts(name, report):
    return [
        verdict(name + "-bound", report.within_bound, report.tolerance,
                max_modulus=report.max_modulus,
                expected=report.expected,
                converged=report.roots.converged,
                residual=report.roots.residual),
        verdict(name + "-product", report.product_ok,
                params.ROOT_RESIDUAL_TOL,
                moduli=[abs(w) for w in report.roots.roots]),
    ]


def sum_bound_check(series, count, q, tol=params.MODULUS_TOL, name="bound"):
    """|sum at s| <= count q^(s/2) + tol for every s in the series, where
    `count` is the number of inverse roots."""
    return [bound_verdict("%s-s%d" % (name, s), abs(value),
                          count * q ** (s / 2), tol)
            for s, value in enumerate(series, 1)]


def weil_bound_check(series, n, q, tol=params.MODULUS_TOL):
    """|S_s(f)| <= (n - 1) q^(s/2) + tol for f of degree n."""
    return sum_bound_check(series, n - 1, q, tol, "weil")


# __________________________________________________________________________
# Closed forms

def closed_form_u2(field, a, b, chi=None):
    """L(z) for u = 2 from Gauss sums and G_2 values alone.

    q even: 1 + G_2(a,b) z + q z^2.
    q odd:  1 + G_2(a,b) z + eta(a) g G_2(-b^2/(4a), -2a) z^2
              + q eta(a) g z^3, with g the quadratic Gauss sum.
    """
    chi = additive_character(field) if chi is None else chi
    a, b = field.element(a), field.element(b)
    if a.is_zero() or b.is_zero():
        raise ValueError("The u = 2 closed form needs a, b != 0")
    g2 = g_sum(2, a, b, chi, 1)
    context = {"u": 2, "a": a.code, "b": b.code, "field": field.to_dict(),
               "closed_form": True}
    if field.p == 2:
        return LPolynomial([1, g2, field.q], context)
    eta_a = quadratic_character(field)(a).to_int()
    gauss = gauss_quadratic(field, chi)
    twisted = g_sum(2, -(b * b) / (4 * a), -2 * a, chi, 1)
    return LPolynomial([1, g2, eta_a * gauss * twisted,
                        field.q * eta_a * gauss], context)


# __________________________________________________________________________
# Independent paths to the sums

def lambda_power_sum(s, u, a, b, chi):
    """sum over irreducible monic g with deg g | s of deg(g) lambda(g)^(s/deg g).

    This is the coefficient of z^s in z L'(z)/L(z) and so equals
    G_u^(s)(a, b), without building F_{q^s}.
    """
    field = chi.field
    total = CycloNumber.zero(chi.value_order)
    for d in core.divisors(s):
        for g in enumerate_irreducible(field, d):
            value = lambda_eval(g, u, a, b, chi)
            if not value.is_zero():
                total = total + d * value ** (s // d)
    return total


def kloosterman_recursion(k1, q, smax):
    """k^(s) = -k^(s-1) k - q k^(s-2) with k^(0) = -2; returns s = 1..smax."""
    values = [-2, k1]
    while len(values) <= smax:
        values.append(-values[-1] * k1 - q * values[-2])
    return values[1:smax + 1]


def kloosterman_dickson(k1, q, smax):
    """k^(s) = -D_s(-k, q), the classical Dickson polynomial."""
    return [-dickson_d1_recurrence(DicksonInput(1, [-k1], q, s))
            for s in range(1, smax + 1)]


# __________________________________________________________________________
# Suites

def _brute_series(func, smax, meta):
    values = []
    for s in range(1, smax + 1):
        values.append(func(s))
        logging.info("%s at s=%d: %s", meta.get("kind", "sum"), s, values[-1])
    return SumSeries(meta, values)


def recursion_check(suite, brute, t, expected_modulus, tol=params.MODULUS_TOL,
                     check_bound=True):
    """Derive e_1..e_t from the first t brute-force sums, predict the rest
    and compare exactly; then check the inverse roots against the bound.
    With `check_bound` False the root moduli are only recorded.
    Returns the elementary values."""
    elem = sums_to_elementary(brute, t)
    predicted = predict_sums(elem, brute.values[:t], len(brute))
    suite.add("elementary", elem)
    suite.add("brute_force", brute.values)
    suite.add("predicted", predicted.values)
    for s in range(t + 1, len(brute) + 1):
        suite.check(exact_verdict("predict-s%d" % s, brute[s], predicted[s]))
    lpoly = L_from_elementary(elem)
    report = roots_and_bound(lpoly, expected_modulus, tol)
    suite.add("roots", report.roots.roots)
    suite.add("max_modulus", report.max_modulus)
    if check_bound:
        for item in bound_verdicts("roots", report):
            suite.check(item)
    else:
        suite.add("root_moduli", [abs(w) for w in report.roots.roots])
    return elem


def weil_suite(chi, f, smax, bound=None, processes=1, tol=params.MODULUS_TOL):
    """S_s(f) for deg f = n coprime to q: n - 1 inverse roots of modulus at
    most sqrt(q), recursion from S_1..S_(n-1)."""
    field = chi.field
    f = coerce_poly(field, f)
    n = len(f) - 1
    if n < 1 or math.gcd(n, field.p) != 1:
        raise ValueError("Need deg f >= 1 coprime to p; got degree %d" % n)
    meta = {"kind": "S", "f": format_poly(f)}
    brute = _brute_series(lambda s: weil_sum_S(chi, f, s, bound, processes),
                          smax, meta)
    suite = SuiteResult("weil", {"f": format_poly(f), "roots_expected": n - 1})
    recursion_check(suite, brute, n - 1, math.sqrt(field.q), tol)
    for item in weil_bound_check(brute, n, field.q, tol):
        suite.check(item)
    return suite


def mult_suite(psi, f, smax, bound=None, processes=1, tol=params.MODULUS_TOL):
    """T_s(f) for f with d distinct roots: d - 1 inverse roots of modulus at
    most sqrt(q)."""
    field = psi.field
    f = coerce_poly(field, f)
    d = _distinct_roots(f)
    if d < 1:
        raise ValueError("%s has no roots to sum over" % format_poly(f))
    meta = {"kind": "T", "f": format_poly(f)}
    brute = _brute_series(lambda s: mult_sum_T(psi, f, s, bound, processes),
                          smax, meta)
    suite = SuiteResult("mult", {"f": format_poly(f), "roots_expected": d - 1})
    recursion_check(suite, brute, d - 1, math.sqrt(field.q), tol)
    for item in sum_bound_check(brute, d - 1, field.q, tol, "T"):
        suite.check(item)
    return suite


def _distinct_roots(f):
    """Number of distinct roots of f in its algebraic closure, i.e. the
    degree of f / gcd(f, f')."""
    field = f[0].owner
    deriv = coerce_poly(field, [i * c for i, c in enumerate(f)][1:])
    if not deriv:
        raise ValueError("%s is a p-th power" % format_poly(f))
    common = _poly_gcd(list(f), deriv)
    return (len(f) - 1) - (len(common) - 1)


def _poly_gcd(left, right):
    left, right = list(left), list(right)
    while right and any(not c.is_zero() for c in right):
        while right and right[-1].is_zero():
            right.pop()
        lead_inv = right[-1].inverse()
        monic = [c * lead_inv for c in right]
        rem = list(left)
        for top in range(len(rem) - 1, len(monic) - 2, -1):
            lead = rem[top]
            if not lead.is_zero():
                shift = top - len(monic) + 1
                for j, m_j in enumerate(monic):
                    rem[shift + j] = rem[shift + j] - lead * m_j
        rem = rem[:len(monic) - 1]
        while rem and rem[-1].is_zero():
            rem.pop()
        left, right = monic, rem
    return left


def gsum_suite(field, u, a, b, smax, chi=None, bound=None, processes=1,
               tol=params.MODULUS_TOL):
    """The full pipeline for G_u(a, b): L by enumeration (with the vanishing
    degree-(u+2) sum), e_j from brute-force sums, exact agreement of the
    two, prediction to smax, the level-s bound (u+1) q^(s/2) and the root
    moduli.

    The bounds are asserted only under `has_root_bound`; otherwise the moduli and sums are recorded as measured.
    """
    chi = additive_character(field) if chi is None else chi
    a, b = check_hypothesis(field, u, a, b)
    meta = {"kind": "G", "u": u, "a": a.code, "b": b.code}
    suite = SuiteResult("gsum-u%d-a%d-b%d" % (u, a.code, b.code),
                        {"u": u, "a": a.code, "b": b.code})
    lpoly = build_L(u, a, b, chi, verify=True, bound=bound)
    suite.add("L", lpoly.coeffs)
    suite.check(exact_verdict("tail", 0, lpoly.context["tail"]))
    brute = _brute_series(lambda s: g_sum(u, a, b, chi, s, bound, processes),
                          max(smax, u + 1), meta)
    bounded = has_root_bound(field, u, b)
    suite.add("bound_asserted", bounded)
    elem = recursion_check(suite, brute, u + 1, math.sqrt(field.q), tol,
                           bounded)
    suite.check(exact_verdict("L-vs-sums", lpoly.elementary().values[:u + 1]
                              + [0] * (u + 1 - lpoly.degree), elem))
    if bounded:
        for item in sum_bound_check(brute, u + 1, field.q, tol, "G"):
            suite.check(item)
    return suite


def kloosterman_suite(field, a, b, smax, chi=None, bound=None, processes=1,
                      tol=params.MODULUS_TOL):
    """Brute-force Kloosterman sums against the three-term recursion and
    the Dickson form, plus |w_1| = |w_2| = sqrt(q)."""
    chi = additive_character(field) if chi is None else chi
    a, b = field.element(a), field.element(b)
    if a.is_zero() or b.is_zero():
        raise ValueError("Kloosterman sums here need a, b != 0")
    meta = {"kind": "G", "u": 1, "a": a.code, "b": b.code}
    brute = _brute_series(lambda s: g_sum(1, a, b, chi, s, bound, processes),
                          smax, meta)
    k1 = brute[1]
    recursive = kloosterman_recursion(k1, field.q, smax)
    dickson = kloosterman_dickson(k1, field.q, smax)
    suite = SuiteResult("kloosterman-a%d-b%d" % (a.code, b.code),
                        {"a": a.code, "b": b.code, "values": brute.values})
    suite.check(exact_verdict("recursion", brute.values, recursive))
    suite.check(exact_verdict("dickson", brute.values, dickson))
    report = roots_and_bound(LPolynomial([1, k1, field.q]),
                             math.sqrt(field.q), tol)
    suite.add("roots", report.roots.roots)
    suite.check(verdict("roots-on-circle", report.all_on_circle, tol,
                        moduli=[abs(w) for w in report.roots.roots]))
    return suite


def generalized_suite(f, g, chi, smax, bound=None, processes=1,
                      tol=params.MODULUS_TOL):
    """G^(s)(f, g): e_1..e_(m+n) from brute-force sums, predictions up to
    smax compared exactly, and the sqrt(q) root bound when
    gcd(m + n, q) = 1."""
    field = chi.field
    f, g = coerce_poly(field, f), coerce_poly(field, g)
    m, n = len(f) - 1, len(g) - 1
    if m < 1 or n < 1:
        raise ValueError("Generalized sums need deg f, deg g >= 1; got %d, %d"
                         % (m, n))
    if math.gcd(m, field.q) != 1 and math.gcd(n, field.q) != 1:
        raise ValueError("Need gcd(deg f, q) = 1 or gcd(deg g, q) = 1")
    t = m + n
    smax = max(smax, t + 1)
    meta = {"kind": "GEN", "f": format_poly(f), "g": format_poly(g)}
    brute = _brute_series(
        lambda s: generalized_sum(f, g, chi, s, bound, processes), smax, meta)
    suite = SuiteResult("generalized", {"f": format_poly(f),
                                        "g": format_poly(g)})
    if math.gcd(t, field.q) == 1:
        recursion_check(suite, brute, t, math.sqrt(field.q), tol)
    else:
        elem = sums_to_elementary(brute, t)
        predicted = predict_sums(elem, brute.values[:t], smax)
        suite.add("elementary", elem)
        for s in range(t + 1, smax + 1):
            suite.check(exact_verdict("predict-s%d" % s, brute[s],
                                      predicted[s]))
    return suite


def lambda_multiplicativity(field, u, a=1, b=1, chi=None, max_degree=4):
    """lambda(g h) == lambda(g) lambda(h) for every pair of monic g, h of
    positive degree with deg g + deg h <= max_degree."""
    chi = additive_character(field) if chi is None else chi
    cache = {}

    def lam(poly):
        if poly not in cache:
            cache[poly] = lambda_eval(poly, u, a, b, chi)
        return cache[poly]

    checked = failures = 0
    for deg_g in range(1, max_degree):
        for deg_h in range(deg_g, max_degree - deg_g + 1):
            for g in enumerate_monic(field, deg_g):
                for h in enumerate_monic(field, deg_h):
                    checked += 1
                    if lambda_eval(g * h, u, a, b, chi) != lam(g) * lam(h):
                        failures += 1
    suite = SuiteResult("lambda-q%d-u%d" % (field.q, u),
                        {"pairs": checked})
    suite.check(verdict("multiplicative", failures == 0, None,
                        pairs=checked, failures=failures))
    return suite
