"""Inertia and extreme-eigenvalue queries for symmetric banded Toeplitz
matrices.

Everything rests on Sylvester's law: the LDL^T factorization of T - sigma*I
exposes, through the signs of the pivots, how many eigenvalues of T lie
below, at, and above sigma.  Bisection on sigma then encloses lambda_min(T)
in an interval of requested width without ever forming a dense matrix or
calling a general eigensolver; each probe costs O(m b^2).

The initial bracket is [t_0 - 2 sum_{k>=1} |t_k|, t_0]: the lower end is the
common Gershgorin bound of all rows, the upper end is the Rayleigh quotient
of the first coordinate vector.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._ldlt import banded_ldlt_signs
from .toeplitz import SymmetricBandedToeplitz

__all__ = [
    "Inertia",
    "EigenInterval",
    "ldlt_inertia",
    "min_eigenvalue",
    "is_positive_definite",
    "DEFAULT_EIG_TOL",
]

DEFAULT_EIG_TOL = 1e-10

# relative size below which a pivot counts as zero
_PIVOT_REL = 1e-14

# relative shift nudge applied when a probe lands on a tiny pivot
_NUDGE = 2.0 ** -40

_MAX_RETRIES = 3
_BISECTION_CAP = 200


@dataclass(frozen=True)
class Inertia:
    """Eigenvalue counts of T - shift*I below, at, and above zero.

    ``effective_shift`` is the shift actually factored; it differs from the
    request (and ``perturbed`` is set) when tiny pivots forced a nudge.
    ``degenerate`` marks the last-resort pass in which tiny pivots were
    counted as zeros instead of retried, so the zero count is a numerical
    verdict rather than an exact rank statement.
    """

    negative: int
    zero: int
    positive: int
    effective_shift: float
    perturbed: bool = False
    degenerate: bool = False


@dataclass(frozen=True)
class EigenInterval:
    """Enclosure lo <= lambda_min(T) <= hi.

    ``converged`` is False only when the bisection iteration cap was reached
    before the interval narrowed to the requested tolerance; the enclosure
    is still valid, just wider than asked for.
    """

    lo: float
    hi: float
    iterations: int
    converged: bool = True

    @property
    def width(self) -> float:
        return self.hi - self.lo

    @property
    def midpoint(self) -> float:
        return 0.5 * (self.lo + self.hi)


def ldlt_inertia(T: SymmetricBandedToeplitz, shift: float = 0.0) -> Inertia:
    """Inertia of T - shift*I via banded LDL^T pivot signs.

    A pivot below 1e-14 * (1 + ||T||_inf) in magnitude would poison the
    elimination, so the factorization is retried at most three times with
    the shift nudged by one part in 2^40.  If every retry hits a tiny pivot
    the final pass counts those pivots as zero eigendirections and flags the
    result ``degenerate``.
    """
    diags = np.asarray(T.diagonals, dtype=np.float64)
    threshold = _PIVOT_REL * (1.0 + T.inf_norm())
    sigma = float(shift)
    for attempt in range(_MAX_RETRIES + 1):
        neg, zero, pos, aborted = banded_ldlt_signs(
            diags, T.order, sigma, threshold, False
        )
        if not aborted:
            return Inertia(
                negative=neg,
                zero=zero,
                positive=pos,
                effective_shift=sigma,
                perturbed=(attempt > 0),
            )
        sigma = sigma * (1.0 + _NUDGE) + _NUDGE
    neg, zero, pos, _ = banded_ldlt_signs(diags, T.order, sigma, threshold, True)
    return Inertia(
        negative=neg,
        zero=zero,
        positive=pos,
        effective_shift=sigma,
        perturbed=True,
        degenerate=True,
    )


def min_eigenvalue(
    T: SymmetricBandedToeplitz, tol: float = DEFAULT_EIG_TOL
) -> EigenInterval:
    """Enclose the smallest eigenvalue of T in an interval of width <= tol.

    Parameters
    ----------
    T : SymmetricBandedToeplitz
    tol : float
        Target interval width, must be positive.

    Returns
    -------
    EigenInterval

    Notes
    -----
    Each bisection probe factors T - sigma*I and reads off the inertia:
    a negative pivot count > 0 pulls the upper end down to sigma, a clean
    zero count pins lambda_min = sigma exactly, and otherwise the lower end
    moves up.  Probes answered degenerately are treated conservatively (the
    upper end moves) and the next probe point is offset from the midpoint.
    The iteration stops after 200 probes even if tol was not reached; the
    ``converged`` flag records which case occurred.
    """
    if not tol > 0.0:
        raise ValueError("tol must be positive")
    t0 = T.diagonals[0]
    radius = 2.0 * sum(abs(t) for t in T.diagonals[1:])
    if radius == 0.0:
        return EigenInterval(lo=t0, hi=t0, iterations=0, converged=True)
    lo = t0 - radius
    hi = t0
    iters = 0
    offset = 0.5
    while hi - lo > tol and iters < _BISECTION_CAP:
        sigma = lo + offset * (hi - lo)
        offset = 0.5
        inert = ldlt_inertia(T, sigma)
        s = inert.effective_shift
        iters += 1
        if not (lo < s < hi):
            # the nudge pushed the probe out of the bracket; the interval is
            # already at perturbation scale
            break
        if inert.degenerate:
            hi = s
            offset = 0.25
        elif inert.negative > 0:
            hi = s
        elif inert.zero > 0:
            return EigenInterval(lo=s, hi=s, iterations=iters, converged=True)
        else:
            lo = s
    return EigenInterval(
        lo=lo, hi=hi, iterations=iters, converged=(hi - lo) <= tol
    )


def is_positive_definite(
    T: SymmetricBandedToeplitz, margin: float = 0.0, tol: float = DEFAULT_EIG_TOL
) -> bool:
    """True when lambda_min(T) is certifiably greater than ``margin``.

    Certifiably means the whole bisection enclosure lies above ``margin``;
    a matrix whose smallest eigenvalue sits within ``tol`` of the margin can
    therefore report False.  ``margin`` must be nonnegative.
    """
    if margin < 0.0:
        raise ValueError("margin must be nonnegative")
    return min_eigenvalue(T, tol).lo > margin
