"""Command line front end.

Exit codes follow one convention across subcommands: 0 for success or an
affirmative verdict, 1 for a negative verdict (unstable, non-member, no
certifying order found), 2 for usage or validation errors.

Coefficients are accepted inline (--p, --c, --d) or through a JSON problem
file of the form {"kind": "trig", "p": [...]} or {"kind": "pair", "n": N,
"c": [...], "d": [...]}; unknown keys are rejected and inline values win
over file values.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .approx import (
    DEFAULT_PC_TOL,
    NotInSprSetError,
    convergence_csv,
    convergence_table,
    find_m0,
    member_Pc,
    member_Pcm,
    member_S,
)
from .polynomial import (
    MonicPolynomial,
    TrigPolynomial,
    schur_stable,
    symmetrized_product,
    trig_min,
)
from .region import GridSpec, CellClass, emit_csv, emit_svg, rasterize
from .region import boundary_residuals as _boundary_residuals
from .spectra import DEFAULT_EIG_TOL, min_eigenvalue
from .toeplitz import build_moment, build_weighted, to_dense

__all__ = ["main"]


def _fmt(value: float, digits: int) -> str:
    return format(float(value), f".{digits}g")


def _check_digits(digits: int) -> int:
    if not 1 <= digits <= 17:
        raise ValueError("--digits must be between 1 and 17")
    return digits


def _load_problem(path: str) -> dict:
    with open(path) as fh:
        data = json.load(fh)
    if not isinstance(data, dict):
        raise ValueError("problem file must contain a JSON object")
    kind = data.get("kind")
    if kind == "trig":
        allowed = {"kind", "p"}
    elif kind == "pair":
        allowed = {"kind", "n", "c", "d"}
    else:
        raise ValueError("problem file kind must be 'trig' or 'pair'")
    unknown = sorted(set(data) - allowed)
    if unknown:
        raise ValueError(f"unknown problem file keys: {', '.join(unknown)}")
    if kind == "trig":
        if "p" not in data:
            raise ValueError("trig problem file needs key p")
        return {"kind": "trig", "p": [float(v) for v in data["p"]]}
    if "c" not in data or "d" not in data:
        raise ValueError("pair problem file needs keys c and d")
    c = [float(v) for v in data["c"]]
    d = [float(v) for v in data["d"]]
    if len(c) != len(d):
        raise ValueError("pair problem file needs c and d of equal length")
    if "n" in data and int(data["n"]) != len(c):
        raise ValueError("pair problem file n does not match coefficient count")
    return {"kind": "pair", "c": c, "d": d}


def _resolve_pair(ns) -> tuple[MonicPolynomial, MonicPolynomial]:
    c = getattr(ns, "c", None)
    d = getattr(ns, "d", None)
    if (c is None) != (d is None):
        raise ValueError("--c and --d must be given together")
    if c is not None:
        return MonicPolynomial(tuple(c)), MonicPolynomial(tuple(d))
    if getattr(ns, "file", None):
        prob = _load_problem(ns.file)
        if prob["kind"] != "pair":
            raise ValueError("this command needs a pair; the problem file is 'trig'")
        return MonicPolynomial(tuple(prob["c"])), MonicPolynomial(tuple(prob["d"]))
    raise ValueError("no polynomial pair given: pass --c and --d, or --file")


def _resolve_trig(ns) -> TrigPolynomial:
    p = getattr(ns, "p", None)
    if p is not None:
        return TrigPolynomial(tuple(p))
    c = getattr(ns, "c", None)
    d = getattr(ns, "d", None)
    if (c is None) != (d is None):
        raise ValueError("--c and --d must be given together")
    if c is not None:
        return symmetrized_product(
            MonicPolynomial(tuple(c)), MonicPolynomial(tuple(d))
        )
    if getattr(ns, "file", None):
        prob = _load_problem(ns.file)
        if prob["kind"] == "trig":
            return TrigPolynomial(tuple(prob["p"]))
        return symmetrized_product(
            MonicPolynomial(tuple(prob["c"])), MonicPolynomial(tuple(prob["d"]))
        )
    raise ValueError("no polynomial given: pass --p, --c and --d, or --file")


def _resolve_d(ns) -> MonicPolynomial:
    d = getattr(ns, "d", None)
    if d is not None:
        return MonicPolynomial(tuple(d))
    if getattr(ns, "file", None):
        prob = _load_problem(ns.file)
        if prob["kind"] != "pair":
            raise ValueError("this command needs d; the problem file is 'trig'")
        return MonicPolynomial(tuple(prob["d"]))
    raise ValueError("no polynomial given: pass --d or --file")


def _build_matrix(ns):
    p = _resolve_trig(ns)
    if ns.kind == "pm":
        return build_weighted(p, ns.m)
    return build_moment(p, ns.m)


def cmd_trig_min(ns) -> int:
    digits = _check_digits(ns.digits)
    res = trig_min(_resolve_trig(ns), ns.tol)
    print(f"minimum {_fmt(res.value, digits)}")
    print(f"argmin {_fmt(res.argmin, digits)}")
    print(f"certified-error {_fmt(res.certified_error, digits)}")
    return 0


def cmd_matrix(ns) -> int:
    digits = _check_digits(ns.digits)
    dense = to_dense(_build_matrix(ns))
    if ns.format == "csv":
        for row in dense:
            print(",".join(_fmt(v, 17) for v in row))
        return 0
    cells = [[_fmt(v, digits) for v in row] for row in dense]
    width = max(len(s) for row in cells for s in row)
    for row in cells:
        print("  ".join(s.rjust(width) for s in row))
    return 0


def cmd_eig_min(ns) -> int:
    digits = _check_digits(ns.digits)
    interval = min_eigenvalue(_build_matrix(ns), ns.tol)
    print(f"lo {_fmt(interval.lo, digits)}")
    print(f"hi {_fmt(interval.hi, digits)}")
    print(f"iterations {interval.iterations}")
    return 0


def cmd_stable(ns) -> int:
    _check_digits(ns.digits)
    ok = schur_stable(_resolve_d(ns))
    print("stable" if ok else "unstable")
    return 0 if ok else 1


def cmd_member(ns) -> int:
    digits = _check_digits(ns.digits)
    if ns.set == "s":
        verdict = member_S(_resolve_d(ns))
    else:
        c, d = _resolve_pair(ns)
        if ns.set == "pc":
            verdict = member_Pc(c, d, ns.tol)
        else:
            if ns.m is None:
                raise ValueError("member --set pcm requires --m")
            verdict = member_Pcm(c, d, ns.m)
    print("member" if verdict.member else "non-member")
    if ns.set != "s":
        print(f"certificate {_fmt(verdict.certificate, digits)}")
    if verdict.matrix_order is not None:
        print(f"matrix-order {verdict.matrix_order}")
    return 0 if verdict.member else 1


def cmd_find_m0(ns) -> int:
    _check_digits(ns.digits)
    c, d = _resolve_pair(ns)
    m0 = find_m0(c, d, ns.max_m)
    if m0 is None:
        print(f"m0 not found up to {ns.max_m}")
        return 1
    print(m0)
    return 0


def cmd_converge(ns) -> int:
    _check_digits(ns.digits)
    if ns.m_to < ns.m_from:
        raise ValueError("--m-to must be at least --m-from")
    rows = convergence_table(_resolve_trig(ns), range(ns.m_from, ns.m_to + 1))
    csv = convergence_csv(rows)
    if ns.out:
        Path(ns.out).write_text(csv)
    else:
        sys.stdout.write(csv)
    return 0


def _parse_fixes(items) -> dict[int, float]:
    fixed: dict[int, float] = {}
    for item in items or []:
        key_str, sep, val_str = item.partition("=")
        if not sep:
            raise ValueError(f"--fix expects index=value, got {item!r}")
        try:
            key = int(key_str)
            val = float(val_str)
        except ValueError as exc:
            raise ValueError(f"--fix expects index=value, got {item!r}") from exc
        if key in fixed:
            raise ValueError(f"duplicate --fix for index {key}")
        fixed[key] = val
    return fixed


def cmd_region(ns) -> int:
    _check_digits(ns.digits)
    c = MonicPolynomial(tuple(ns.c))
    fixed = _parse_fixes(ns.fix)
    free = sorted(set(range(c.degree)) - set(fixed))
    if len(free) != 2:
        raise ValueError(
            "exactly two coefficient indices must remain free; pin the others "
            "with --fix"
        )
    spec = GridSpec(
        axis_x=free[0],
        axis_y=free[1],
        bounds=tuple(ns.bounds),
        resolution=tuple(ns.res),
        fixed_coords=fixed,
    )
    raster = rasterize(c, ns.m, spec)
    out = Path(ns.out)
    if out.suffix == ".csv":
        out.write_text(emit_csv(raster))
    elif out.suffix == ".svg":
        out.write_text(emit_svg(raster))
    else:
        raise ValueError(f"--out must end in .csv or .svg, got {out.suffix!r}")
    for cls in (CellClass.LMI_INNER, CellClass.STABLE_ONLY, CellClass.UNSTABLE):
        print(f"{cls.name} {raster.count(cls)}")
    return 0


def cmd_boundary(ns) -> int:
    digits = _check_digits(ns.digits)
    cubic, quartic = _boundary_residuals(ns.d0, ns.d1)
    print(f"cubic {_fmt(cubic, digits)}")
    print(f"quartic {_fmt(quartic, digits)}")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="toepstab",
        description=(
            "Trigonometric polynomial positivity certificates via banded "
            "Toeplitz matrices and inner approximations of the Schur "
            "stability region."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--digits",
        type=int,
        default=17,
        help="significant digits for printed reals (default 17)",
    )
    filearg = argparse.ArgumentParser(add_help=False)
    filearg.add_argument(
        "--file", help="JSON problem file; inline coefficients take precedence"
    )

    q = sub.add_parser(
        "trig-min",
        parents=[common, filearg],
        help="certified global minimum of an even trigonometric polynomial",
    )
    q.add_argument("--p", type=float, nargs="+", help="coefficients p_0 .. p_n")
    q.add_argument("--c", type=float, nargs="+", help="monic c, trailing coefficients")
    q.add_argument("--d", type=float, nargs="+", help="monic d, trailing coefficients")
    q.add_argument("--tol", type=float, default=1e-9)
    q.set_defaults(func=cmd_trig_min)

    for name, helptext, func in (
        ("matrix", "print a weighted or moment Toeplitz matrix", cmd_matrix),
        ("eig-min", "enclose the smallest eigenvalue", cmd_eig_min),
    ):
        q = sub.add_parser(name, parents=[common, filearg], help=helptext)
        q.add_argument("--kind", choices=("pm", "rm"), required=True)
        q.add_argument("--m", type=int, required=True, help="matrix order")
        q.add_argument("--p", type=float, nargs="+")
        q.add_argument("--c", type=float, nargs="+")
        q.add_argument("--d", type=float, nargs="+")
        if name == "matrix":
            q.add_argument("--format", choices=("text", "csv"), default="text")
        else:
            q.add_argument("--tol", type=float, default=DEFAULT_EIG_TOL)
        q.set_defaults(func=func)

    q = sub.add_parser(
        "stable",
        parents=[common, filearg],
        help="Schur stability of a monic polynomial",
    )
    q.add_argument("--d", type=float, nargs="+")
    q.set_defaults(func=cmd_stable)

    q = sub.add_parser(
        "member",
        parents=[common, filearg],
        help="membership in the stable set, the positivity region, or the "
        "order-m matrix inner approximation",
    )
    q.add_argument("--set", choices=("s", "pc", "pcm"), required=True)
    q.add_argument("--c", type=float, nargs="+")
    q.add_argument("--d", type=float, nargs="+")
    q.add_argument("--m", type=int, help="matrix order (pcm only)")
    q.add_argument("--tol", type=float, default=DEFAULT_PC_TOL, help="pc margin")
    q.set_defaults(func=cmd_member)

    q = sub.add_parser(
        "find-m0",
        parents=[common, filearg],
        help="smallest order whose matrix certificate holds through --max-m",
    )
    q.add_argument("--c", type=float, nargs="+")
    q.add_argument("--d", type=float, nargs="+")
    q.add_argument("--max-m", type=int, required=True)
    q.set_defaults(func=cmd_find_m0)

    q = sub.add_parser(
        "converge",
        parents=[common, filearg],
        help="CSV table of eigenvalue bounds over a range of orders",
    )
    q.add_argument("--p", type=float, nargs="+")
    q.add_argument("--c", type=float, nargs="+")
    q.add_argument("--d", type=float, nargs="+")
    q.add_argument("--m-from", type=int, required=True)
    q.add_argument("--m-to", type=int, required=True)
    q.add_argument("--out", help="write CSV here instead of stdout")
    q.set_defaults(func=cmd_converge)

    q = sub.add_parser(
        "region",
        parents=[common],
        help="rasterize a stability region slice to CSV or SVG",
    )
    q.add_argument("--c", type=float, nargs="+", required=True)
    q.add_argument("--m", type=int, required=True)
    q.add_argument(
        "--bounds",
        type=float,
        nargs=4,
        default=(-1.5, 1.5, -1.5, 1.5),
        metavar=("XMIN", "XMAX", "YMIN", "YMAX"),
    )
    q.add_argument(
        "--res", type=int, nargs=2, default=(201, 201), metavar=("NX", "NY")
    )
    q.add_argument(
        "--fix",
        nargs="*",
        metavar="IDX=VAL",
        help="pin coefficient indices outside the plotted plane",
    )
    q.add_argument("--out", required=True, help="output path, .csv or .svg")
    q.set_defaults(func=cmd_region)

    q = sub.add_parser(
        "boundary",
        parents=[common],
        help="boundary curve residuals for the order-7 slice at c = z^2",
    )
    q.add_argument("--d0", type=float, required=True)
    q.add_argument("--d1", type=float, required=True)
    q.set_defaults(func=cmd_boundary)

    return parser


def main(argv: list[str] | None = None) -> int:
    ns = _build_parser().parse_args(argv)
    try:
        return ns.func(ns)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
