"""Monic and even trigonometric polynomials.

A real monic polynomial d(z) = d_0 + d_1 z + ... + d_{n-1} z^{n-1} + z^n is
stored by its n trailing coefficients; the coefficient vector is the natural
coordinate system for the degree-n Schur stability region.  An even
trigonometric polynomial p(theta) = p_0 + 2 sum_{k>=1} p_k cos(k theta) is
stored by the coefficient tuple (p_0, ..., p_n); evenness means the minimum
over the circle is attained on [0, pi].

The module provides evaluation, the symmetrized product of two monic
polynomials (an even trigonometric polynomial that is positive exactly when
the rational function d/c is strictly positive real on the unit circle),
a Schur stability test, and a certified global minimizer for trigonometric
polynomials based on a Lipschitz branch-and-bound.
"""

from __future__ import annotations

import heapq
import itertools
import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "MonicPolynomial",
    "TrigPolynomial",
    "TrigMinResult",
    "eval_trig",
    "symmetrized_product",
    "schur_stable",
    "trig_min",
]

_EPS = float(np.finfo(float).eps)

# Inverse golden ratio, used by the local polish step of trig_min.
_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


def _as_float_tuple(values, what: str) -> tuple[float, ...]:
    try:
        out = tuple(float(v) for v in values)
    except (TypeError, ValueError) as exc:
        raise ValueError(f"{what} must be a sequence of real numbers") from exc
    if not all(math.isfinite(v) for v in out):
        raise ValueError(f"{what} must be finite")
    return out


@dataclass(frozen=True)
class MonicPolynomial:
    """Real monic polynomial in ascending powers.

    ``coeffs`` holds (d_0, ..., d_{n-1}); the leading coefficient of z^n is
    implicitly 1 and is never stored.  The degree n = len(coeffs) must be
    at least 1.
    """

    coeffs: tuple[float, ...]

    def __post_init__(self) -> None:
        coeffs = _as_float_tuple(self.coeffs, "coeffs")
        if len(coeffs) == 0:
            raise ValueError("a monic polynomial needs degree >= 1")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs)

    @classmethod
    def power(cls, n: int) -> "MonicPolynomial":
        """The pure power z^n."""
        if n < 1:
            raise ValueError("power must be at least 1")
        return cls((0.0,) * n)

    def __call__(self, z):
        """Evaluate at a real or complex point (arrays broadcast)."""
        acc = np.ones_like(np.asarray(z, dtype=complex))
        for c in reversed(self.coeffs):
            acc = acc * z + c
        if np.isscalar(z) or np.ndim(z) == 0:
            return complex(acc)
        return acc


@dataclass(frozen=True)
class TrigPolynomial:
    """Even trigonometric polynomial p_0 + 2 sum_{k=1}^n p_k cos(k theta).

    ``coeffs`` holds (p_0, ..., p_n) and doubles as the Fourier coefficient
    sequence of p: the k-th Fourier coefficient of p is p_k for |k| <= n and
    zero beyond.  Degree 0 (a constant) is allowed.
    """

    coeffs: tuple[float, ...]

    def __post_init__(self) -> None:
        coeffs = _as_float_tuple(self.coeffs, "coeffs")
        if len(coeffs) == 0:
            raise ValueError("coeffs must be non-empty")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1


@dataclass(frozen=True)
class TrigMinResult:
    """Outcome of a certified global minimization over [0, pi].

    ``value`` equals the polynomial evaluated at ``argmin`` and lies within
    ``certified_error`` of the true global minimum.
    """

    value: float
    argmin: float
    certified_error: float


def eval_trig(p: TrigPolynomial, theta):
    """Evaluate p at ``theta`` (scalar or array).

    Parameters
    ----------
    p : TrigPolynomial
    theta : float or array_like
        Angle(s) in radians.

    Returns
    -------
    float or ndarray
    """
    t = np.asarray(theta, dtype=float)
    acc = np.full_like(t, p.coeffs[0])
    for k in range(1, len(p.coeffs)):
        acc += 2.0 * p.coeffs[k] * np.cos(k * t)
    if np.isscalar(theta) or np.ndim(theta) == 0:
        return float(acc)
    return acc


def _eval_scalar(p0: float, rest: tuple[float, ...], theta: float) -> float:
    # scalar fast path for the branch-and-bound loop
    acc = p0
    for k, pk in enumerate(rest, start=1):
        acc += 2.0 * pk * math.cos(k * theta)
    return acc


def _eval_with_derivative(
    p0: float, rest: tuple[float, ...], theta: float
) -> tuple[float, float]:
    acc = p0
    der = 0.0
    for k, pk in enumerate(rest, start=1):
        acc += 2.0 * pk * math.cos(k * theta)
        der -= 2.0 * k * pk * math.sin(k * theta)
    return acc, der


def symmetrized_product(c: MonicPolynomial, d: MonicPolynomial) -> TrigPolynomial:
    """Even trigonometric polynomial p with p(theta) = 2 Re(conj(c(z)) d(z)),
    z = e^{i theta}.

    With a_j, b_j the full coefficient sequences of c and d (leading entry 1),
    the k-th output coefficient collects sum_{|j-l|=k} a_j b_l; the constant
    term carries the diagonal sum twice so that evaluation uses the standard
    p_0 + 2 sum p_k cos(k theta) convention.

    Both polynomials must have the same degree.  The product is positive on
    the whole circle exactly when d/c is strictly positive real there, which
    for Schur stable c pins down the inner region this package approximates.
    """
    if c.degree != d.degree:
        raise ValueError(
            f"degree mismatch: c has degree {c.degree}, d has degree {d.degree}"
        )
    n = c.degree
    a = np.append(np.asarray(c.coeffs), 1.0)
    b = np.append(np.asarray(d.coeffs), 1.0)
    out = np.zeros(n + 1)
    for j in range(n + 1):
        for l in range(n + 1):
            k = abs(j - l)
            w = 2.0 if k == 0 else 1.0
            out[k] += w * a[j] * b[l]
    return TrigPolynomial(tuple(out))


def schur_stable(d: MonicPolynomial) -> bool:
    """True when every root of d lies strictly inside the unit circle.

    Runs the classical step-down recursion on the reflection coefficients:
    a degree-k monic polynomial with constant term gamma is Schur stable iff
    |gamma| < 1 and the deflated degree-(k-1) polynomial is.  Any |gamma| >= 1,
    including the degenerate |gamma| = 1 case with a root on the circle,
    reports False; the stable set is open so boundary polynomials are
    excluded on purpose.
    """
    a = list(d.coeffs) + [1.0]
    k = len(a) - 1
    while k > 0:
        gamma = a[0]
        if abs(gamma) >= 1.0:
            return False
        denom = 1.0 - gamma * gamma
        a = [(a[j] - gamma * a[k - j]) / denom for j in range(1, k + 1)]
        k -= 1
    return True


def _golden_polish(f, a: float, b: float, x0: float, f0: float):
    """Refine a minimizer inside [a, b] by golden-section search.

    Returns the best evaluated point; never worse than (x0, f0).
    """
    best_x, best_f = x0, f0
    x1 = b - _INVPHI * (b - a)
    x2 = a + _INVPHI * (b - a)
    f1, f2 = f(x1), f(x2)
    for _ in range(120):
        if f1 < best_f:
            best_x, best_f = x1, f1
        if f2 < best_f:
            best_x, best_f = x2, f2
        if (b - a) <= 1e-13:
            break
        if f1 <= f2:
            b, x2, f2 = x2, x1, f1
            x1 = b - _INVPHI * (b - a)
            f1 = f(x1)
        else:
            a, x1, f1 = x1, x2, f2
            x2 = a + _INVPHI * (b - a)
            f2 = f(x2)
    return best_x, best_f


def trig_min(p: TrigPolynomial, tol: float = 1e-9) -> TrigMinResult:
    """Certified global minimum of an even trigonometric polynomial.

    Parameters
    ----------
    p : TrigPolynomial
    tol : float
        Requested certification gap, must be positive.

    Returns
    -------
    TrigMinResult
        ``value`` = p(``argmin``) with ``value - certified_error`` a rigorous
        lower bound for min p over the circle.

    Notes
    -----
    By evenness the search is restricted to [0, pi].  The derivative bounds
    |p'| <= L = 2 sum_k k |p_k| and |p''| <= M = 2 sum_k k^2 |p_k| turn every
    evaluation into a certificate on [t - h, t + h]:

        p >= p(t) - min( L h,  |p'(t)| h + M h^2 / 2 ).

    The Taylor form takes over near stationary points, where it tightens
    quadratically as intervals shrink.  Intervals are kept in a min-heap
    ordered by their lower bound and split until the incumbent value is
    within ``tol`` of the smallest outstanding bound, so the returned gap
    is certified rather than heuristic.  A golden-section polish then
    sharpens the incumbent inside its bracket, which can only shrink the
    reported gap.

    Certification below roughly 64*eps*(1 + |p_0| + 2 sum |p_k|) is not
    attempted; for smaller ``tol`` the returned ``certified_error`` is the
    gap that was actually achieved.
    """
    if not tol > 0.0:
        raise ValueError("tol must be positive")
    p0 = p.coeffs[0]
    rest = p.coeffs[1:]
    lip = 2.0 * sum(k * abs(pk) for k, pk in enumerate(rest, start=1))
    if lip == 0.0:
        # constant on the circle (degree 0, or all higher coefficients zero)
        return TrigMinResult(value=p0, argmin=0.0, certified_error=0.0)
    curv = 2.0 * sum(k * k * abs(pk) for k, pk in enumerate(rest, start=1))

    scale = abs(p0) + 2.0 * sum(abs(pk) for pk in rest)
    gap_target = max(tol, 64.0 * _EPS * (1.0 + scale))

    def f(t: float) -> float:
        return _eval_scalar(p0, rest, t)

    best_arg, best_val = 0.0, f(0.0)
    f_pi = f(math.pi)
    if f_pi < best_val:
        best_arg, best_val = math.pi, f_pi

    tie = itertools.count()
    heap = []

    def push(a: float, b: float) -> None:
        nonlocal best_arg, best_val
        mid = 0.5 * (a + b)
        h = 0.5 * (b - a)
        fmid, dmid = _eval_with_derivative(p0, rest, mid)
        if fmid < best_val:
            best_arg, best_val = mid, fmid
        lower = fmid - min(lip * h, abs(dmid) * h + 0.5 * curv * h * h)
        heapq.heappush(heap, (lower, next(tie), a, b, mid))

    push(0.0, math.pi)
    while True:
        lower, _, a, b, mid = heapq.heappop(heap)
        if best_val - lower <= gap_target:
            global_lower = lower
            width = b - a
            break
        push(a, mid)
        push(mid, b)

    lo_br = max(0.0, best_arg - width)
    hi_br = min(math.pi, best_arg + width)
    best_arg, best_val = _golden_polish(f, lo_br, hi_br, best_arg, best_val)

    return TrigMinResult(
        value=best_val,
        argmin=best_arg,
        certified_error=best_val - global_lower,
    )
