"""WeilKit utilities."""
from __future__ import absolute_import, division, print_function

import contextlib
import logging
import math
import os
import sys

import sympy

from . import params


# __________________________________________________________________________
# Report output

@contextlib.contextmanager
def open_output(destination):
    """Yield a text handle for a report destination.

    `destination` is a file name, an open file-like object, or None for
    standard output. Missing parent directories of a file name are created,
    and the name is logged once the file is closed.
    """
    if destination is None:
        yield sys.stdout
    elif isinstance(destination, str):
        parent = os.path.dirname(destination)
        if parent and not os.path.isdir(parent):
            os.makedirs(parent)
            logging.info("Created directory %s", parent)
        with open(destination, 'w') as handle:
            yield handle
        logging.info("Wrote %s", destination)
    else:
        yield destination


def write_text(destination, text):
    """Write a finished report string."""
    with open_output(destination) as handle:
        handle.write(text)


def write_dataframe(destination, dframe):
    """Write a report table as comma-separated values with a header row."""
    with open_output(destination) as handle:
        dframe.to_csv(handle, index=False)


# __________________________________________________________________________
# Enumeration limits

def enum_bound(override=None):
    """The largest field size a brute-force sweep may enumerate.

    Precedence: explicit `override` (the --enum-bound flag), then the
    WEILKIT_ENUM_BOUND environment variable, then `params.ENUM_BOUND`.
    """
    if override is not None:
        return int(override)
    env_value = os.environ.get(params.ENUM_BOUND_ENV)
    if env_value:
        try:
            return int(env_value)
        except ValueError:
            raise ValueError("%s must be an integer; got %r"
                             % (params.ENUM_BOUND_ENV, env_value))
    return params.ENUM_BOUND


def check_enum_bound(size, bound=None, what="field"):
    """Raise ValueError if `size` elements exceed the enumeration bound."""
    limit = enum_bound(bound)
    if size > limit:
        raise ValueError("Cannot enumerate %s of size %d: exceeds the "
                         "enumeration bound %d (see --enum-bound)"
                         % (what, size, limit))
    return limit


# __________________________________________________________________________
# Integer helpers

def prime_divisors(n):
    """Sorted list of the distinct primes dividing n."""
    if n < 1:
        raise ValueError("Can only factor positive integers; got %d" % n)
    return [int(prime) for prime in sympy.primefactors(n)]


def divisors(n):
    """Sorted list of all positive divisors of n."""
    if n < 1:
        raise ValueError("Can only factor positive integers; got %d" % n)
    return [int(d) for d in sympy.divisors(n)]


def euler_phi(n):
    """Euler's totient function."""
    return int(sympy.totient(n))


def moebius(n):
    """The Moebius function mu(n)."""
    return int(sympy.mobius(n))


def is_prime(n):
    return bool(sympy.isprime(n))


def lcm(a, b):
    return a // math.gcd(a, b) * b


def inverse_mod(a, m):
    """Inverse of a modulo m; ValueError if gcd(a, m) != 1."""
    try:
        return pow(a, -1, m)
    except ValueError:
        raise ValueError("%d is not invertible modulo %d" % (a, m))

