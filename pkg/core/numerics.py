# core/numerics.py - Shared quadrature and differencing helpers
"""
Numerical building blocks shared by the r11 apps.

- Composite Gauss-Legendre panels (uniform and geometrically graded)
- Central differences for scalar, complex or vector valued functions
- Richardson extrapolation over halving sequences
- Seeded random generators and a compactly supported test profile
"""

import logging
from functools import lru_cache

import numpy as np
from scipy.special import roots_legendre

logger = logging.getLogger(__name__)


@lru_cache(maxsize=32)
def gauss_legendre(order):
    """Gauss-Legendre nodes and weights on [-1, 1]"""
    nodes, weights = roots_legendre(order)
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return nodes, weights


def uniform_breaks(start, end, max_width):
    """Breakpoints splitting [start, end] into equal panels no wider than max_width"""
    if end <= start:
        return np.array([start, end], dtype=float)
    count = max(1, int(np.ceil((end - start) / max_width)))
    return np.linspace(start, end, count + 1)


def graded_breaks(anchor, end, first, max_width):
    """
    Breakpoints from anchor towards end, geometrically graded

    Panels double in width starting from `first` until they reach
    max_width, after which uniform panels fill the rest. Works in both
    directions (end may be left of anchor).

    Args:
        anchor: Point where the finest panel starts
        end: Far end of the interval
        first: Width of the first panel
        max_width: Widest allowed panel

    Returns:
        np.ndarray: Increasing breakpoints covering the interval
    """
    direction = 1.0 if end >= anchor else -1.0
    length = abs(end - anchor)
    if length == 0.0:
        return np.array([anchor, end], dtype=float)

    offsets = [0.0]
    width = min(first, max_width)
    while offsets[-1] + width < length and width < max_width:
        offsets.append(offsets[-1] + width)
        width *= 2.0
    tail = uniform_breaks(offsets[-1], length, max_width)
    offsets = np.concatenate([offsets[:-1], tail])

    breaks = anchor + direction * offsets
    return np.sort(breaks)


def panel_rule(breaks, order):
    """
    Composite Gauss-Legendre rule over consecutive breakpoints

    Returns:
        tuple: (nodes, weights) as flat arrays, ordered left to right
    """
    breaks = np.asarray(breaks, dtype=float)
    x, w = gauss_legendre(order)
    left = breaks[:-1, None]
    half = 0.5 * np.diff(breaks)[:, None]
    nodes = left + half * (x[None, :] + 1.0)
    weights = half * w[None, :]
    return nodes.ravel(), weights.ravel()


def central_difference(func, x, h, axis_vector=None):
    """
    Symmetric first difference of func at x

    x may be real, complex or an array; axis_vector gives the direction
    (defaults to 1). Values are converted with np.asarray so complex and
    coefficient-vector outputs work alike.
    """
    direction = 1.0 if axis_vector is None else axis_vector
    forward = np.asarray(func(x + h * direction))
    backward = np.asarray(func(x - h * direction))
    return (forward - backward) / (2.0 * h)


def second_difference(func, x, h, axis_vector=None):
    """Symmetric second difference of func at x"""
    direction = 1.0 if axis_vector is None else axis_vector
    forward = np.asarray(func(x + h * direction))
    center = np.asarray(func(x))
    backward = np.asarray(func(x - h * direction))
    return (forward - 2.0 * center + backward) / (h * h)


def richardson_table(values, orders=(1, 3)):
    """
    Richardson extrapolation for a halving sequence

    values[k] is computed at step h0 * 2**-k. Each entry of `orders` is
    the power of h removed by one more column.

    Returns:
        list: Columns of the table, column 0 being the raw values
    """
    table = [np.asarray(values, dtype=float)]
    for order in orders:
        previous = table[-1]
        if len(previous) < 2:
            break
        factor = 2.0 ** order
        table.append((factor * previous[1:] - previous[:-1]) / (factor - 1.0))
    return table


def observed_order(errors):
    """Least-squares slope of log2(error) against halving index, sign flipped"""
    errors = np.asarray(errors, dtype=float)
    mask = errors > 0
    if mask.sum() < 2:
        return 0.0
    index = np.arange(len(errors))[mask]
    slope = np.polyfit(index, np.log2(errors[mask]), 1)[0]
    return float(-slope)


def make_rng(seed):
    """Seeded numpy generator; every randomized path goes through here"""
    return np.random.default_rng(seed)


def smooth_bump(x):
    """exp(-1/(1 - x^2)) on (-1, 1), zero elsewhere; C-infinity with compact support"""
    x = np.asarray(x, dtype=float)
    out = np.zeros_like(x)
    inside = np.abs(x) < 1.0
    out[inside] = np.exp(-1.0 / (1.0 - x[inside] ** 2))
    return out
