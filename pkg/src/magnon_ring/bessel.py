"""Integer-order Bessel functions of the first kind.

Valid for ``|order| <= 64`` and ``|x| <= 256`` with absolute error below 1e-12.
Small arguments use the ascending power series; larger ones use Miller's
downward recurrence normalised by ``J_0 + 2 sum_k J_2k = 1``.
"""

from __future__ import annotations

import math

import numpy as np

from .model import ValidationError

MAX_ORDER = 64
MAX_ARG = 256.0
SERIES_CUTOFF = 8.0

_RESCALE = 1e250


def _series(n: int, x: float) -> float:
    half = 0.5 * x
    term = 1.0
    for i in range(1, n + 1):
        term *= half / i
    total = term
    q = -half * half
    k = 0
    while True:
        k += 1
        term *= q / (k * (k + n))
        total += term
        if abs(term) < 1e-17 * max(abs(total), 1e-300) or term == 0.0:
            break
    return total


def _miller(n: int, x: float) -> float:
    top = max(n, int(x))
    start = top + 30 + int(math.sqrt(40.0 * top))
    start += start % 2
    two_over_x = 2.0 / x
    j_next = 0.0
    j_cur = 1e-30
    norm = 0.0
    result = 0.0
    for m in range(start, 0, -1):
        j_prev = m * two_over_x * j_cur - j_next
        j_next, j_cur = j_cur, j_prev
        if abs(j_cur) > _RESCALE:
            j_cur /= _RESCALE
            j_next /= _RESCALE
            norm /= _RESCALE
            result /= _RESCALE
        # j_cur now holds the unnormalised J_{m-1}
        if (m - 1) % 2 == 0 and m - 1 > 0:
            norm += j_cur
        if m - 1 == n:
            result = j_cur
    norm = 2.0 * norm + j_cur
    return result / norm


def bessel_j(order: int, x: float) -> float:
    """J_order(x) for integer order."""
    if isinstance(order, bool) or int(order) != order:
        raise ValidationError(f"order must be an integer, got {order!r}")
    n = int(order)
    x = float(x)
    if abs(n) > MAX_ORDER:
        raise ValidationError(f"|order| must be <= {MAX_ORDER}, got {n}")
    if not math.isfinite(x) or abs(x) > MAX_ARG:
        raise ValidationError(f"|x| must be <= {MAX_ARG}, got {x!r}")
    sign = 1.0
    if n < 0:
        n = -n
        sign *= -1.0 if n % 2 else 1.0
    if x < 0:
        x = -x
        sign *= -1.0 if n % 2 else 1.0
    if x == 0.0:
        return sign * (1.0 if n == 0 else 0.0)
    if x <= SERIES_CUTOFF:
        return sign * _series(n, x)
    return sign * _miller(n, x)


def bessel_j_array(order: int, x) -> np.ndarray:
    """Elementwise :func:`bessel_j` over an array of arguments."""
    flat = np.asarray(x, dtype=float)
    out = np.array([bessel_j(order, v) for v in flat.ravel()])
    return out.reshape(flat.shape)
