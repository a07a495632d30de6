"""Banded LDL^T elimination kernel.

Compiled with numba because inertia bisection probes the factorization
hundreds of times per eigenvalue and the region rasterizer runs tens of
thousands of eigenvalue queries; the pure Python loop is two to three
orders of magnitude slower.

The working array W stores band column j as W[r, j] = A[j + r, j] for
r = 0..b, the standard lower-band layout.  Elimination of column j updates
only the b x b trailing block inside the band, so the factorization costs
O(m b^2) and never fills in.
"""

import numpy as np
from numba import njit


@njit(cache=True)
def banded_ldlt_signs(diagonals, order, shift, threshold, force):
    """Pivot sign counts of the LDL^T factorization of T - shift*I.

    Parameters
    ----------
    diagonals : float64[:]
        Distinct diagonal values (t_0, ..., t_b) of the symmetric banded
        Toeplitz matrix T.
    order : int
        Matrix order m.
    shift : float
    threshold : float
        Pivot magnitudes below this are treated as zero.
    force : bool
        When False the routine aborts on the first tiny pivot (the caller
        retries with a perturbed shift).  When True tiny pivots are counted
        as zero eigendirections and elimination continues with the pivot
        clamped to +-threshold so the update stays bounded.

    Returns
    -------
    (neg, zero, pos, aborted) : tuple of int, int, int, bool
    """
    b = diagonals.shape[0] - 1
    W = np.zeros((b + 1, order))
    for j in range(order):
        W[0, j] = diagonals[0] - shift
        top = min(b, order - 1 - j)
        for r in range(1, top + 1):
            W[r, j] = diagonals[r]

    neg = 0
    zero = 0
    pos = 0
    for j in range(order):
        d = W[0, j]
        if abs(d) < threshold:
            if not force:
                return -1, -1, -1, True
            zero += 1
            d = threshold if d >= 0.0 else -threshold
        elif d > 0.0:
            pos += 1
        else:
            neg += 1
        r = min(b, order - 1 - j)
        for i in range(1, r + 1):
            wij = W[i, j]
            if wij != 0.0:
                f = wij / d
                for s in range(i, r + 1):
                    W[s - i, j + i] -= f * W[s, j]
    return neg, zero, pos, False
