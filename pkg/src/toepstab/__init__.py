"""Positivity certificates for even trigonometric polynomials via banded
Toeplitz matrices, and convex inner approximations of the Schur stability
region built from them."""

from .polynomial import (
    MonicPolynomial,
    TrigPolynomial,
    TrigMinResult,
    eval_trig,
    symmetrized_product,
    schur_stable,
    trig_min,
)
from .toeplitz import (
    SymmetricBandedToeplitz,
    build_weighted,
    build_moment,
    frobenius_gap,
    quadratic_form,
    to_dense,
)
from .spectra import (
    Inertia,
    EigenInterval,
    ldlt_inertia,
    min_eigenvalue,
    is_positive_definite,
    DEFAULT_EIG_TOL,
)
from .approx import (
    MembershipVerdict,
    ConvergenceRow,
    NotInSprSetError,
    member_S,
    member_Pc,
    member_Pcm,
    find_m0,
    convergence_table,
    convergence_csv,
    DEFAULT_PC_TOL,
)
from .region import (
    CellClass,
    GridSpec,
    RegionRaster,
    CLASS_FILLS,
    rasterize,
    boundary_residuals,
    emit_csv,
    emit_svg,
)

__version__ = "0.1.0"

__all__ = [
    "MonicPolynomial",
    "TrigPolynomial",
    "TrigMinResult",
    "eval_trig",
    "symmetrized_product",
    "schur_stable",
    "trig_min",
    "SymmetricBandedToeplitz",
    "build_weighted",
    "build_moment",
    "frobenius_gap",
    "quadratic_form",
    "to_dense",
    "Inertia",
    "EigenInterval",
    "ldlt_inertia",
    "min_eigenvalue",
    "is_positive_definite",
    "DEFAULT_EIG_TOL",
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
    "CellClass",
    "GridSpec",
    "RegionRaster",
    "CLASS_FILLS",
    "rasterize",
    "boundary_residuals",
    "emit_csv",
    "emit_svg",
    "__version__",
]
