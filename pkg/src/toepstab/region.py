"""Rasterized pictures of the stability region and its matrix inner
approximations in a two-dimensional slice of coefficient space.

A grid assigns every cell center one of three classes: inside the matrix
inner approximation (which implies stability), Schur stable but outside the
approximation, or unstable.  The raster serializes to CSV for downstream
tools and to a self-contained SVG for looking at.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import IntEnum
from typing import Mapping

import numpy as np

from .approx import member_Pcm
from .polynomial import MonicPolynomial, schur_stable
from .spectra import DEFAULT_EIG_TOL

__all__ = [
    "CellClass",
    "GridSpec",
    "RegionRaster",
    "CLASS_FILLS",
    "rasterize",
    "boundary_residuals",
    "emit_csv",
    "emit_svg",
]


class CellClass(IntEnum):
    UNSTABLE = 0
    STABLE_ONLY = 1
    LMI_INNER = 2


CLASS_FILLS = {
    CellClass.LMI_INNER: "#9e9e9e",
    CellClass.STABLE_ONLY: "#e8e8e8",
    CellClass.UNSTABLE: "#ffffff",
}


@dataclass(frozen=True)
class GridSpec:
    """Axis-aligned sampling grid over a coordinate plane of d-space.

    ``axis_x`` and ``axis_y`` are the coefficient indices spanning the plane;
    every other coefficient of d is pinned by ``fixed_coords``.  ``bounds``
    is (x_min, x_max, y_min, y_max) and ``resolution`` is (nx, ny).  Cells
    are classified at their centers.
    """

    axis_x: int
    axis_y: int
    bounds: tuple[float, float, float, float]
    resolution: tuple[int, int]
    fixed_coords: Mapping[int, float] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.axis_x == self.axis_y:
            raise ValueError("axis_x and axis_y must differ")
        if self.axis_x < 0 or self.axis_y < 0:
            raise ValueError("axis indices must be nonnegative")
        bounds = tuple(float(v) for v in self.bounds)
        if len(bounds) != 4:
            raise ValueError("bounds must be (x_min, x_max, y_min, y_max)")
        if not all(math.isfinite(v) for v in bounds):
            raise ValueError("bounds must be finite")
        if bounds[0] >= bounds[1] or bounds[2] >= bounds[3]:
            raise ValueError("bounds must be strictly increasing per axis")
        res = tuple(int(v) for v in self.resolution)
        if len(res) != 2 or res[0] < 1 or res[1] < 1:
            raise ValueError("resolution must be two positive counts")
        fixed = {int(k): float(v) for k, v in self.fixed_coords.items()}
        if self.axis_x in fixed or self.axis_y in fixed:
            raise ValueError("fixed_coords must not pin a plane axis")
        if not all(math.isfinite(v) for v in fixed.values()):
            raise ValueError("fixed coordinates must be finite")
        object.__setattr__(self, "bounds", bounds)
        object.__setattr__(self, "resolution", res)
        object.__setattr__(self, "fixed_coords", fixed)

    def check_degree(self, n: int) -> None:
        covered = {self.axis_x, self.axis_y, *self.fixed_coords}
        if covered != set(range(n)):
            raise ValueError(
                f"plane axes plus fixed coordinates must cover indices 0..{n - 1}"
            )

    def x_centers(self) -> np.ndarray:
        x_min, x_max = self.bounds[0], self.bounds[1]
        nx = self.resolution[0]
        dx = (x_max - x_min) / nx
        return x_min + dx * (np.arange(nx) + 0.5)

    def y_centers(self) -> np.ndarray:
        y_min, y_max = self.bounds[2], self.bounds[3]
        ny = self.resolution[1]
        dy = (y_max - y_min) / ny
        return y_min + dy * (np.arange(ny) + 0.5)


@dataclass(frozen=True, eq=False)
class RegionRaster:
    """Classified grid: ``cells[iy, ix]`` is the CellClass at the cell
    center (x_centers()[ix], y_centers()[iy])."""

    spec: GridSpec
    cells: np.ndarray
    matrix_order: int
    central: MonicPolynomial

    def count(self, cls: CellClass) -> int:
        return int(np.count_nonzero(self.cells == int(cls)))


def rasterize(
    c: MonicPolynomial,
    m: int,
    spec: GridSpec,
    eig_tol: float = DEFAULT_EIG_TOL,
) -> RegionRaster:
    """Classify every grid cell of the slice for central polynomial c and
    matrix order m.

    The matrix certificate implies stability, so a cell reported LMI_INNER
    but not Schur stable would expose a defect in one of the two tests;
    that situation raises instead of being rendered.
    """
    n = c.degree
    spec.check_degree(n)
    if not schur_stable(c):
        raise ValueError("central polynomial c must be Schur stable")
    if m <= n:
        raise ValueError(f"order m={m} must exceed the polynomial degree n={n}")

    base = np.zeros(n)
    for k, v in spec.fixed_coords.items():
        base[k] = v
    xs = spec.x_centers()
    ys = spec.y_centers()
    cells = np.empty((len(ys), len(xs)), dtype=np.int8)
    for iy, y in enumerate(ys):
        for ix, x in enumerate(xs):
            base[spec.axis_x] = x
            base[spec.axis_y] = y
            d = MonicPolynomial(tuple(base))
            stable = schur_stable(d)
            if member_Pcm(c, d, m, eig_tol).member:
                if not stable:
                    raise RuntimeError(
                        f"matrix certificate without stability at "
                        f"({x}, {y}); the inner approximation is violated"
                    )
                cells[iy, ix] = CellClass.LMI_INNER
            elif stable:
                cells[iy, ix] = CellClass.STABLE_ONLY
            else:
                cells[iy, ix] = CellClass.UNSTABLE
    return RegionRaster(spec=spec, cells=cells, matrix_order=m, central=c)


def boundary_residuals(d0: float, d1: float) -> tuple[float, float]:
    """Residuals of the two plane curves bounding the order-7 matrix inner
    approximation for the second-degree pure-power central polynomial.

    The determinant of the order-7 weighted matrix of p^{c,d}, c = z^2,
    factors over these two polynomials (up to a positive constant), so the
    approximation boundary in the (d_0, d_1) plane lies on their zero sets.
    Returns (cubic, quartic) residual values at the point.
    """
    d0 = float(d0)
    d1 = float(d1)
    cubic = (
        -7200.0
        + 5040.0 * d0
        + 3528.0 * d0 ** 2
        + 4900.0 * d1 ** 2
        - 5145.0 * d0 * d1 ** 2
    )
    quartic = (
        6480000.0
        + 4536000.0 * d0
        - 9525600.0 * d0 ** 2
        - 8820000.0 * d1 ** 2
        - 4445280.0 * d0 ** 3
        + 7717500.0 * d0 * d1 ** 2
        + 3111696.0 * d0 ** 4
        - 4321800.0 * d0 ** 2 * d1 ** 2
        + 1500625.0 * d1 ** 4
    )
    return cubic, quartic


def emit_csv(raster: RegionRaster) -> str:
    """Rows ``x,y,class`` over cell centers, y varying slowest."""
    lines = ["x,y,class"]
    xs = raster.spec.x_centers()
    ys = raster.spec.y_centers()
    for iy, y in enumerate(ys):
        for ix, x in enumerate(xs):
            name = CellClass(raster.cells[iy, ix]).name
            lines.append(f"{x:.17g},{y:.17g},{name}")
    return "\n".join(lines) + "\n"


def emit_svg(raster: RegionRaster) -> str:
    """Self-contained SVG: one rectangle per cell (y axis pointing up),
    a frame with tick labels, axis labels, a legend, and a title recording
    the central polynomial, the matrix order, and any fixed coordinates."""
    spec = raster.spec
    x_min, x_max, y_min, y_max = spec.bounds
    nx, ny = spec.resolution
    plot_w, plot_h = 560.0, 560.0
    ml, mt, mr, mb = 72.0, 44.0, 24.0, 92.0
    total_w = ml + plot_w + mr
    total_h = mt + plot_h + mb
    cell_w = plot_w / nx
    cell_h = plot_h / ny

    def px(x: float) -> float:
        return ml + (x - x_min) / (x_max - x_min) * plot_w

    def py(y: float) -> float:
        return mt + (y_max - y) / (y_max - y_min) * plot_h

    title = (
        f"c={list(raster.central.coeffs)}  m={raster.matrix_order}"
        f"  fixed={raster.spec.fixed_coords}"
    )
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" '
        f'width="{total_w:.0f}" height="{total_h:.0f}" '
        f'viewBox="0 0 {total_w:.0f} {total_h:.0f}">',
        f'<rect x="0" y="0" width="{total_w:.0f}" height="{total_h:.0f}" '
        f'fill="#ffffff"/>',
        f'<text x="{ml:.2f}" y="{mt - 16:.2f}" font-family="sans-serif" '
        f'font-size="14">{title}</text>',
        '<g id="cells">',
    ]
    dx = (x_max - x_min) / nx
    dy = (y_max - y_min) / ny
    for iy in range(ny):
        y_top = y_min + (iy + 1) * dy
        for ix in range(nx):
            x_left = x_min + ix * dx
            fill = CLASS_FILLS[CellClass(raster.cells[iy, ix])]
            out.append(
                f'<rect class="cell" x="{px(x_left):.2f}" y="{py(y_top):.2f}" '
                f'width="{cell_w:.2f}" height="{cell_h:.2f}" fill="{fill}"/>'
            )
    out.append("</g>")
    out.append(
        f'<rect x="{ml:.2f}" y="{mt:.2f}" width="{plot_w:.2f}" '
        f'height="{plot_h:.2f}" fill="none" stroke="#000000"/>'
    )
    label_font = 'font-family="sans-serif" font-size="13"'
    out.append(
        f'<text x="{px(x_min):.2f}" y="{mt + plot_h + 18:.2f}" {label_font} '
        f'text-anchor="middle">{x_min:g}</text>'
    )
    out.append(
        f'<text x="{px(x_max):.2f}" y="{mt + plot_h + 18:.2f}" {label_font} '
        f'text-anchor="middle">{x_max:g}</text>'
    )
    out.append(
        f'<text x="{ml - 8:.2f}" y="{py(y_min) + 4:.2f}" {label_font} '
        f'text-anchor="end">{y_min:g}</text>'
    )
    out.append(
        f'<text x="{ml - 8:.2f}" y="{py(y_max) + 4:.2f}" {label_font} '
        f'text-anchor="end">{y_max:g}</text>'
    )
    out.append(
        f'<text x="{ml + plot_w / 2:.2f}" y="{mt + plot_h + 38:.2f}" '
        f'{label_font} text-anchor="middle">d{spec.axis_x}</text>'
    )
    out.append(
        f'<text x="{ml - 46:.2f}" y="{mt + plot_h / 2:.2f}" {label_font} '
        f'text-anchor="middle" transform="rotate(-90 {ml - 46:.2f} '
        f'{mt + plot_h / 2:.2f})">d{spec.axis_y}</text>'
    )
    legend = [
        (CellClass.LMI_INNER, "matrix inner approximation"),
        (CellClass.STABLE_ONLY, "stable only"),
        (CellClass.UNSTABLE, "unstable"),
    ]
    ly = mt + plot_h + 58.0
    lx = ml
    for cls, text in legend:
        out.append(
            f'<rect class="swatch" x="{lx:.2f}" y="{ly:.2f}" width="16" '
            f'height="16" fill="{CLASS_FILLS[cls]}" stroke="#000000"/>'
        )
        out.append(
            f'<text x="{lx + 22:.2f}" y="{ly + 13:.2f}" {label_font}>{text}</text>'
        )
        lx += 190.0
    out.append("</svg>")
    return "\n".join(out) + "\n"
