"""Membership tests for the nested stability approximations.

For a fixed Schur stable monic c of degree n, three sets of monic
polynomials d of the same degree are distinguished, each contained in
the next:

* the matrix inner approximation: the weighted Toeplitz matrix of the
  symmetrized product p^{c,d} is positive definite at order m
  (``member_Pcm``, a single linear matrix inequality in d);
* the positivity region: p^{c,d} > 0 on the whole circle (``member_Pc``),
  equivalently d/c is strictly positive real there;
* the Schur stable set itself (``member_S``).

Because lambda_min of the weighted matrix converges to min p^{c,d} as the
order grows, the matrix approximations exhaust the positivity region:
``find_m0`` computes the smallest order from which the certificate holds,
and ``convergence_table`` tabulates the quantities that drive the limit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .polynomial import (
    MonicPolynomial,
    TrigPolynomial,
    schur_stable,
    symmetrized_product,
    trig_min,
)
from .spectra import DEFAULT_EIG_TOL, min_eigenvalue
from .toeplitz import build_moment, build_weighted, frobenius_gap

__all__ = [
    "MembershipVerdict",
    "ConvergenceRow",
    "NotInSprSetError",
    "member_S",
    "member_Pc",
    "member_Pcm",
    "find_m0",
    "convergence_table",
    "convergence_csv",
    "DEFAULT_PC_TOL",
]

DEFAULT_PC_TOL = 1e-9

CONVERGENCE_HEADER = "m,lambda_min_Pm,lambda_min_Rm,frobenius_gap,trig_min"


class NotInSprSetError(ValueError):
    """Raised when a search that assumes p^{c,d} > 0 on the circle is run
    on a pair for which that premise fails (or cannot be certified)."""


@dataclass(frozen=True)
class MembershipVerdict:
    """Outcome of a membership test.

    ``certificate`` is the computed margin backing the verdict: the certified
    minimum of p^{c,d} for the positivity region, the smallest-eigenvalue
    estimate for the matrix approximation, and NaN for the plain stability
    test, whose recursion produces a yes/no answer without a number.
    ``matrix_order`` is set only by ``member_Pcm``.
    """

    member: bool
    certificate: float
    matrix_order: int | None = None


@dataclass(frozen=True)
class ConvergenceRow:
    m: int
    lambda_min_Pm: float
    lambda_min_Rm: float
    frobenius_gap: float
    trig_min: float


def member_S(d: MonicPolynomial) -> MembershipVerdict:
    """Schur stability of d, as a verdict."""
    return MembershipVerdict(member=schur_stable(d), certificate=math.nan)


def _product(c: MonicPolynomial, d: MonicPolynomial) -> TrigPolynomial:
    if not schur_stable(c):
        raise ValueError("central polynomial c must be Schur stable")
    return symmetrized_product(c, d)


def member_Pc(
    c: MonicPolynomial, d: MonicPolynomial, tol: float = DEFAULT_PC_TOL
) -> MembershipVerdict:
    """Strict positivity of p^{c,d} on the circle.

    The certificate is the certified global minimum of the symmetrized
    product; membership requires it to clear ``tol``, so pairs whose minimum
    is positive but below ``tol`` are conservatively rejected.
    """
    result = trig_min(_product(c, d), tol)
    return MembershipVerdict(member=result.value > tol, certificate=result.value)


def member_Pcm(
    c: MonicPolynomial,
    d: MonicPolynomial,
    m: int,
    eig_tol: float = DEFAULT_EIG_TOL,
) -> MembershipVerdict:
    """Positive definiteness of the order-m weighted Toeplitz matrix of
    p^{c,d}: one evaluation of the degree-m inner approximation.

    The certificate is the midpoint of the smallest-eigenvalue enclosure;
    membership holds when the whole enclosure is positive.
    """
    T = build_weighted(_product(c, d), m)
    interval = min_eigenvalue(T, eig_tol)
    return MembershipVerdict(
        member=interval.lo > 0.0,
        certificate=interval.midpoint,
        matrix_order=m,
    )


def find_m0(
    c: MonicPolynomial,
    d: MonicPolynomial,
    m_max: int,
    pc_tol: float = DEFAULT_PC_TOL,
) -> int | None:
    """Smallest order m0 <= m_max from which the matrix certificate holds
    for every m in [m0, m_max].

    The scan assumes p^{c,d} > 0 on the circle, which guarantees such an
    order exists (possibly beyond m_max); the premise is checked first and
    its failure raises ``NotInSprSetError`` rather than returning None.
    None means only that no certified suffix exists up to ``m_max``.

    Positive definiteness is not monotone in m, so the whole range is
    evaluated and scanned for the last failure.
    """
    n = c.degree
    if m_max <= n:
        raise ValueError(f"m_max={m_max} must exceed the polynomial degree n={n}")
    if not member_Pc(c, d, pc_tol).member:
        raise NotInSprSetError(
            "p^{c,d} is not certifiably positive on the circle; "
            "no finite matrix order can certify this pair"
        )
    good = [member_Pcm(c, d, m).member for m in range(n + 1, m_max + 1)]
    if not good[-1]:
        return None
    last_bad = -1
    for i, ok in enumerate(good):
        if not ok:
            last_bad = i
    return n + 1 + last_bad + 1 if last_bad >= 0 else n + 1


def convergence_table(
    p: TrigPolynomial, orders: Iterable[int]
) -> list[ConvergenceRow]:
    """Rows (m, lambda_min(P_m), lambda_min(R_m), ||P_m - R_m||_F, min p)
    for each requested order.

    The trigonometric minimum is independent of m and computed once.
    """
    orders = list(orders)
    n = p.degree
    for m in orders:
        if m <= n:
            raise ValueError(f"order m={m} must exceed the polynomial degree n={n}")
    tmin = trig_min(p).value
    rows = []
    for m in orders:
        lam_p = min_eigenvalue(build_weighted(p, m)).midpoint
        lam_r = min_eigenvalue(build_moment(p, m)).midpoint
        rows.append(
            ConvergenceRow(
                m=m,
                lambda_min_Pm=lam_p,
                lambda_min_Rm=lam_r,
                frobenius_gap=frobenius_gap(p, m),
                trig_min=tmin,
            )
        )
    return rows


def convergence_csv(rows: Sequence[ConvergenceRow]) -> str:
    """Serialize rows to CSV with a fixed header, full precision."""
    lines = [CONVERGENCE_HEADER]
    for r in rows:
        lines.append(
            f"{r.m},{r.lambda_min_Pm:.17g},{r.lambda_min_Rm:.17g},"
            f"{r.frobenius_gap:.17g},{r.trig_min:.17g}"
        )
    return "\n".join(lines) + "\n"
