"""Numeric roots of polynomials with complex coefficients."""
from __future__ import absolute_import, division, print_function

import collections
import logging

import numpy as np

from . import params

RootSet = collections.namedtuple('RootSet', 'roots residual tolerance '
                                 'iterations converged')


def durand_kerner(coeffs, radius=1.0, tol=params.ROOT_TOL,
                  max_iter=params.ROOT_MAX_ITER):
    """All roots of the monic polynomial with descending coefficients
    `coeffs` (leading 1), by simultaneous (Weierstrass) iteration.

    Starting points lie on a circle of the expected root radius at the
    deterministic angles 2 pi j / t + ROOT_START_ANGLE. Iteration stops when
    the largest correction falls below `tol` scaled by max(1, radius).

    Raises RuntimeError with the residual if there is no convergence. An
    iteration that stalls with a residual below ROOT_RESIDUAL_TOL (as
    repeated roots do) is returned with `converged` False.
    """
    coeffs = np.asarray(coeffs, dtype=complex)
    degree = len(coeffs) - 1
    if degree < 1:
        return RootSet([], 0.0, tol, 0, True)
    if coeffs[0] != 1:
        coeffs = coeffs / coeffs[0]
    angles = (2 * np.pi * np.arange(degree) / degree
              + params.ROOT_START_ANGLE)
    roots = radius * np.exp(1j * angles)
    threshold = tol * max(1.0, radius)
    converged = True
    for iteration in range(1, max_iter + 1):
        diffs = roots[:, np.newaxis] - roots[np.newaxis, :]
        np.fill_diagonal(diffs, 1.0)
        correction = np.polyval(coeffs, roots) / diffs.prod(axis=1)
        roots = roots - correction
        if np.abs(correction).max() < threshold:
            break
    else:
        residual = float(np.abs(np.polyval(coeffs, roots)).max())
        scale = float(np.abs(coeffs).max())
        if residual > params.ROOT_RESIDUAL_TOL * scale:
            raise RuntimeError("Root finder did not converge in %d "
                               "iterations; residual %g" % (max_iter, residual))
        # Repeated roots converge linearly and stall near sqrt(eps)
        converged = False
        logging.warning("Root finder stalled after %d iterations; accepting "
                        "roots with residual %g", max_iter, residual)
    residual = float(np.abs(np.polyval(coeffs, roots)).max())
    logging.debug("Found %d roots in %d iterations (residual %g)",
                  degree, iteration, residual)
    # Sort for reproducible output
    order = np.lexsort((np.round(roots.imag, 9), np.round(roots.real, 9)))
    return RootSet(list(roots[order]), residual, tol, iteration, converged)
