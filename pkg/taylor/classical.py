# taylor/classical.py - Taylor expansion of the elliptic coherent state
"""
Classical Taylor machinery on the unit disk.

The coherent state f_a = sqrt(1 - |a|^2) / (1 - conj(a) e^{i phi})
expands as sum V_n(a) psi_n with psi_n = e^{i(n-1) phi} and
V_n(a) = sqrt(1 - |a|^2) conj(a)^{n-1}, hence

    W f(a) = <f, f_a> = sum conj(V_n(a)) f_n,   f_n = int f conj(psi_n) dphi
"""

import logging
import math

import numpy as np

from moebius.exceptions import OutOfDomain
from representations.boundary import BoundaryFunction, Domain
from .coefficients import TaylorCoefficients

logger = logging.getLogger(__name__)


def _gap(a):
    gap = 1.0 - abs(a) ** 2
    if gap <= 0:
        raise OutOfDomain("Taylor expansion needs |a| < 1", point=a)
    return gap


def multipliers(a, N):
    """V_n(a) for n = 1..N"""
    a = complex(a)
    return math.sqrt(_gap(a)) * a.conjugate() ** np.arange(N)


def classical_expand(a, phi, N):
    """
    Partial sums of the coherent-state expansion at one angle

    Args:
        a: complex point with |a| < 1
        phi: angle on the circle
        N: number of terms

    Returns:
        np.ndarray: the N partial sums sum_{n<=k} V_n(a) e^{i(n-1) phi}

    Raises:
        OutOfDomain: |a| >= 1
    """
    if N < 1:
        raise ValueError(f"Need at least one term, got N={N}")
    terms = multipliers(a, N) * np.exp(1j * np.arange(N) * phi)
    return np.cumsum(terms)


def classical_coefficients(f, N):
    """
    f_n = int f conj(psi_n) dphi for n = 1..N by the discrete Fourier transform

    Args:
        f: BoundaryFunction on the circle with at least N samples

    Returns:
        TaylorCoefficients: discrete mode
    """
    if f.domain != Domain.CIRCLE:
        raise ValueError(f"Classical coefficients need a function on the circle, got {f.domain.value}")
    if N > f.size:
        raise ValueError(f"{N} coefficients need at least {N} samples, got {f.size}")
    spectrum = np.fft.fft(f.values) * f.spacing
    return TaylorCoefficients('discrete', np.arange(1, N + 1), spectrum[:N])


def classical_taylor_value(f, a, N):
    """
    Unnormalized Cauchy transform W f(a) from N Taylor coefficients

    Agrees with cauchy_disk(f, a).value up to the tail |a|^N and the
    aliasing of the sample grid.
    """
    if not isinstance(f, BoundaryFunction):
        raise TypeError("Classical Taylor value needs a sampled BoundaryFunction")
    coefficients = classical_coefficients(f, N)
    value = complex(np.sum(np.conj(multipliers(a, N)) * coefficients.values))
    logger.debug(f"Classical Taylor value at {a} from {N} terms: {value}")
    return value
