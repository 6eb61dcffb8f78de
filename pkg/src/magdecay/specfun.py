"""Stable special-function evaluation for Landau-level overlap weights.

The central object is :func:`overlap_weight`,

    w(n, m, x) = (min(n,m)! / max(n,m)!) * exp(-x) * x**|n-m|
                 * L_min(n,m)^{|n-m|}(x)**2,

the squared transverse overlap between two Landau states whose guiding
centers and momenta differ by a displacement of squared magnitude ``2*x``
times the magnetic length.  It is a probability: 0 <= w <= 1, symmetric in
(n, m), and sums to one over either index.

Forming the associated Laguerre value and the factorial ratio separately
overflows long before the physically interesting index range is reached, so
``overlap_weight`` propagates the *normalized* function

    phi_k^d(x) = sqrt(k! / (k+d)!) * x**(d/2) * exp(-x/2) * L_k^d(x)

through the correspondingly normalized three-term recurrence

    phi_{k+1} = ((2k+1+d-x) phi_k - sqrt(k(k+d)) phi_{k-1})
                / sqrt((k+1)(k+1+d)),

whose iterates are bounded by 1 in magnitude, and returns phi**2.  The raw
``hermite`` and ``laguerre_assoc`` recurrences are kept as reference paths
for cross-checks at small order.
"""

from __future__ import annotations

import math

import numpy as np

__all__ = [
    "MAX_HERMITE_ORDER",
    "MAX_OVERLAP_INDEX",
    "MAX_OVERLAP_ARGUMENT",
    "hermite",
    "laguerre_assoc",
    "log_factorial_ratio",
    "overlap_weight",
    "overlap_completeness_sum",
]

MAX_HERMITE_ORDER = 200
MAX_OVERLAP_INDEX = 10_000
# exp(-x/2) must stay inside the normal float64 range or the recurrence
# seed loses the scale of the answer
MAX_OVERLAP_ARGUMENT = 1400.0


def hermite(n: int, rho):
    """Physicists' Hermite polynomial H_n(rho) by upward recurrence.

    Reference path only: the raw values overflow for large ``n`` and
    ``|rho|``, hence the order cap.
    """
    if n < 0:
        raise ValueError(f"order must be nonnegative, got {n}")
    if n > MAX_HERMITE_ORDER:
        raise ValueError(f"order {n} above cap {MAX_HERMITE_ORDER}")
    rho = np.asarray(rho, dtype=float)
    h_prev = np.ones_like(rho)
    if n == 0:
        return h_prev if h_prev.ndim else float(h_prev)
    h_cur = 2.0 * rho
    for k in range(1, n):
        h_prev, h_cur = h_cur, 2.0 * rho * h_cur - 2.0 * k * h_prev
    return h_cur if h_cur.ndim else float(h_cur)


def laguerre_assoc(k: int, d: int, x):
    """Associated Laguerre polynomial L_k^d(x) by upward recurrence in k.

    Reference path only; see :func:`overlap_weight` for the bounded
    evaluation used in production.
    """
    if k < 0 or d < 0:
        raise ValueError(f"indices must be nonnegative, got k={k}, d={d}")
    if k > MAX_OVERLAP_INDEX or d > MAX_OVERLAP_INDEX:
        raise ValueError(f"indices (k={k}, d={d}) above cap {MAX_OVERLAP_INDEX}")
    x = np.asarray(x, dtype=float)
    if np.any(x < 0.0):
        raise ValueError("argument must be nonnegative")
    l_prev = np.ones_like(x)
    if k == 0:
        return l_prev if l_prev.ndim else float(l_prev)
    l_cur = 1.0 + d - x
    for j in range(1, k):
        l_prev, l_cur = l_cur, ((2.0 * j + 1.0 + d - x) * l_cur - (j + d) * l_prev) / (j + 1.0)
    return l_cur if l_cur.ndim else float(l_cur)


def log_factorial_ratio(n: int, m: int) -> float:
    """ln(min(n,m)! / max(n,m)!), exactly 0.0 for n == m."""
    if n < 0 or m < 0:
        raise ValueError(f"indices must be nonnegative, got n={n}, m={m}")
    if n == m:
        return 0.0
    lo, hi = min(n, m), max(n, m)
    return math.lgamma(lo + 1) - math.lgamma(hi + 1)


def overlap_weight(n: int, m: int, x):
    """Squared Landau-state overlap w(n, m, x); scalar in, scalar out.

    ``x`` may be a float or an ndarray (the recurrence is vectorized over
    the argument).  Values are clipped to the exact bound w <= 1, which the
    recurrence can overshoot by an ulp near coincidence.
    """
    if n < 0 or m < 0:
        raise ValueError(f"indices must be nonnegative, got n={n}, m={m}")
    if n > MAX_OVERLAP_INDEX or m > MAX_OVERLAP_INDEX:
        raise ValueError(f"indices (n={n}, m={m}) above cap {MAX_OVERLAP_INDEX}")
    xa = np.asarray(x, dtype=float)
    if np.any(xa < 0.0):
        raise ValueError("argument must be nonnegative")
    if np.any(xa > MAX_OVERLAP_ARGUMENT):
        raise ValueError(f"argument above cap {MAX_OVERLAP_ARGUMENT}")
    scalar = xa.ndim == 0
    if scalar:
        xa = xa.reshape(1)

    k, d = min(n, m), abs(n - m)
    # seed phi_0^d(x) = x^(d/2) exp(-x/2) / sqrt(d!) in the log domain;
    # x == 0 handled exactly (0**0 == 1)
    with np.errstate(divide="ignore", invalid="ignore"):
        log_phi0 = 0.5 * (d * np.log(xa) - xa) - 0.5 * math.lgamma(d + 1)
        phi_prev = np.where(xa > 0.0, np.exp(log_phi0), 1.0 if d == 0 else 0.0)

    if k == 0:
        phi = phi_prev
    else:
        phi_cur = (d + 1.0 - xa) * phi_prev / math.sqrt(d + 1.0)
        for j in range(1, k):
            phi_prev, phi_cur = phi_cur, (
                (2.0 * j + 1.0 + d - xa) * phi_cur - math.sqrt(j * (j + d)) * phi_prev
            ) / math.sqrt((j + 1.0) * (j + 1.0 + d))
        phi = phi_cur

    w = np.minimum(phi * phi, 1.0)
    return float(w[0]) if scalar else w


def overlap_completeness_sum(m: int, x: float, tail: float = 1e-16) -> tuple[float, int]:
    """Compensated sum of w(n, m, x) over n with the tail truncated at ``tail``.

    Unitarity of the displacement makes the full sum exactly one; the
    weights die off super-exponentially once n is past the peak near m + x,
    so truncation is safe after a run of sub-``tail`` terms beyond it.
    Returns (total, last n included).
    """
    if tail <= 0.0:
        raise ValueError(f"tail must be positive, got {tail}")
    terms: list[float] = []
    consecutive_small = 0
    n = 0
    while n <= MAX_OVERLAP_INDEX:
        w = overlap_weight(n, m, x)
        terms.append(w)
        consecutive_small = consecutive_small + 1 if w < tail else 0
        if consecutive_small >= 8 and n > m + x:
            break
        n += 1
    return math.fsum(terms), min(n, MAX_OVERLAP_INDEX)
