"""Command-line front end.

Subcommands:

    polygon      build a polygon and emit its vertices (csv or svg)
    limit-curve  sample a limit curve's fundamental arc
    converge     sup-distance table of scaled polygons against a curve
    curvature    scaled local-radius trace over a range of orders
    selftest     run the embedded exact-value checks

Outputs are deterministic byte-for-byte for identical invocations.  Files
are written to a temporary name and atomically renamed, so a failing run
never leaves a partial artifact.  The environment variable JARNIK_THREADS
caps internal parallelism (default: the machine's core count).
"""

from __future__ import annotations

import argparse
import math
import os
import sys
import tempfile
from fractions import Fraction

from . import analysis, curvature, domains, limit_curves, number_theory, polygon


def thread_count() -> int:
    raw = os.environ.get("JARNIK_THREADS", "")
    try:
        n = int(raw)
    except ValueError:
        n = os.cpu_count() or 1
    return max(1, n)


def _write_artifact(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".jarnik-tmp-")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _parse_q_list(raw: str) -> list[int]:
    orders = [int(tok) for tok in raw.split(",") if tok]
    if not orders or any(q < 1 for q in orders):
        raise ValueError("orders must be positive integers")
    return orders


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jarnik",
        description="Lattice polygons from primitive-vector regions, their "
        "limit curves, and local curvature traces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_poly = sub.add_parser("polygon", help="build a polygon and export its vertices")
    p_poly.add_argument("--domain", required=True, help="square | diamond | octagon:<d> | ball:<p>")
    p_poly.add_argument("--q", required=True, type=int, help="order Q >= 1")
    p_poly.add_argument("--scaled", action="store_true", help="emit the rescaled, centered polygon")
    p_poly.add_argument("--format", choices=("csv", "svg"), default="csv")
    p_poly.add_argument("--output", help="output path (default: stdout)")

    p_curve = sub.add_parser("limit-curve", help="sample a limit curve's fundamental arc")
    p_curve.add_argument("--curve", required=True, help="C | C1 | Cdelta:<d> | Cp:<p>")
    p_curve.add_argument("--samples", type=int, default=256)
    p_curve.add_argument("--format", choices=("csv", "svg"), default="csv")
    p_curve.add_argument("--output", help="output path (default: stdout)")

    p_conv = sub.add_parser("converge", help="distance table of scaled polygons to a curve")
    p_conv.add_argument("--domain", required=True)
    p_conv.add_argument("--curve", required=True)
    p_conv.add_argument("--q-list", required=True, help="comma-separated orders, e.g. 50,100,200")
    p_conv.add_argument("--samples", type=int, default=2**14)
    p_conv.add_argument("--output", help="output path (default: stdout)")

    p_curv = sub.add_parser("curvature", help="trace of scaled local radii over a range of orders")
    p_curv.add_argument("--lambda", dest="lam", required=True,
                        help="rat:a/b | surd:(P+sqrt(D))/Q | const:e-2 | const:inv-sqrt3 | cf:[0;...]")
    p_curv.add_argument("--side", choices=("+", "-"), help="required for rational slopes")
    p_curv.add_argument("--q-min", type=int, default=2)
    p_curv.add_argument("--q-max", required=True, type=int)
    p_curv.add_argument("--format", choices=("csv", "svg"), default="csv")
    p_curv.add_argument("--output", help="output path (default: stdout)")

    sub.add_parser("selftest", help="run the embedded exact-value checks")
    return parser


def _cmd_polygon(args: argparse.Namespace) -> str:
    spec = domains.parse_domain(args.domain)
    if args.q < 1:
        raise ValueError("--q must be a positive integer")
    poly = polygon.build_polygon(spec, args.q)
    shape = polygon.scale_polygon(poly) if args.scaled else poly
    return polygon.polygon_csv(shape) if args.format == "csv" else polygon.polygon_svg(shape)


def _cmd_limit_curve(args: argparse.Namespace) -> str:
    curve = limit_curves.parse_curve(args.curve)
    if args.samples < 2:
        raise ValueError("--samples must be at least 2")
    if args.format == "csv":
        return limit_curves.curve_csv(curve, args.samples)
    return limit_curves.curve_svg(curve, args.samples)


def _cmd_converge(args: argparse.Namespace) -> str:
    spec = domains.parse_domain(args.domain)
    curve = limit_curves.parse_curve(args.curve)
    orders = _parse_q_list(args.q_list)
    if args.samples < 1000:
        raise ValueError("--samples must be at least 1000")
    records = analysis.convergence_table(
        spec, orders, curve, samples=args.samples, workers=thread_count()
    )
    return analysis.convergence_csv(records)


def _cmd_curvature(args: argparse.Namespace) -> str:
    lam = number_theory.parse_real(args.lam)
    if lam.is_rational and args.side is None:
        raise ValueError("rational slope needs --side '+' or '-'")
    if not lam.is_rational and args.side is not None:
        raise ValueError("--side applies only to rational slopes")
    if not 2 <= args.q_min <= args.q_max:
        raise ValueError("need 2 <= --q-min <= --q-max")
    trace = curvature.curvature_trace(lam, args.q_min, args.q_max, side=args.side)
    if args.format == "csv":
        return curvature.trace_csv(trace)
    bounds = None
    if not lam.is_rational:
        bounds = curvature._bounds_for(lam)
    return curvature.trace_svg(trace, bounds)


def _selftest_checks() -> list[tuple[str, bool, str]]:
    checks: list[tuple[str, bool, str]] = []

    def record(name: str, ok: bool, detail: str = "") -> None:
        checks.append((name, ok, detail))

    v4 = polygon.primitive_vectors(domains.square(), 4)
    record("48 primitive vectors at order 4", len(v4) == 48, f"got {len(v4)}")

    p4 = polygon.build_polygon(domains.square(), 4)
    head = p4.vertices[:7]
    want = ((0, 0), (4, 1), (7, 2), (9, 3), (12, 5), (16, 8), (17, 9))
    record("order-4 polygon fundamental arc vertices", head == want, f"got {head}")

    vertex = polygon.fundamental_vertex(domains.square(), 4, number_theory.INV_SQRT3)
    record("fundamental vertex (9, 3) at slope 1/sqrt(3)", vertex == (9, 3), f"got {vertex}")

    r2 = curvature.circumradius_squared((7, 2), (9, 3), (12, 5))
    record("circumradius^2 1105/2", r2 == Fraction(1105, 2), f"got {r2}")
    r2b = curvature.circumradius_squared((4, 1), (7, 2), (9, 3))
    record("circumradius^2 725/2", r2b == Fraction(725, 2), f"got {r2b}")

    farey4 = number_theory.farey_sequence(4)
    want_farey = [Fraction(n, d) for n, d in
                  ((0, 1), (1, 4), (1, 3), (1, 2), (2, 3), (3, 4), (1, 1))]
    record("order-4 Farey sequence", farey4 == want_farey, f"got {farey4}")

    nb = number_theory.farey_neighbors(number_theory.INV_SQRT3, 15)
    record(
        "Farey neighbors of 1/sqrt(3) at order 15",
        (nb.left, nb.right) == (Fraction(4, 7), Fraction(7, 12)),
        f"got {nb.left}, {nb.right}",
    )

    cf = number_theory.cf_expand(number_theory.INV_SQRT3, 12)
    record(
        "continued fraction of 1/sqrt(3)",
        cf.partial_quotients == (1, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1),
        f"got {cf.partial_quotients}",
    )
    cf_e = number_theory.cf_expand(number_theory.E_MINUS_2, 12)
    record(
        "continued fraction of e-2",
        cf_e.partial_quotients == (1, 2, 1, 1, 4, 1, 1, 6, 1, 1, 8, 1),
        f"got {cf_e.partial_quotients}",
    )

    x, y = limit_curves.curve_C1(0.37)
    resid = abs(math.sqrt(1 - abs(x)) + math.sqrt(1 - abs(y)) - 1)
    record("diamond limit-curve identity", resid < 1e-12, f"residual {resid:.2e}")

    cx, cy = limit_curves.curve_Cp(2, 0.7)
    circ = abs(cx * cx + cy * cy - 1)
    record("ball(2) limit curve is the unit circle", circ < 1e-9, f"residual {circ:.2e}")

    moments = domains.moment_integrals(domains.diamond(), 1)
    record(
        "diamond wedge moments (1/8, 1/24)",
        (moments.mx, moments.my) == (Fraction(1, 8), Fraction(1, 24)),
        f"got {moments}",
    )
    return checks


def _cmd_selftest() -> tuple[str, bool]:
    checks = _selftest_checks()
    lines = []
    all_ok = True
    for name, ok, detail in checks:
        status = "PASS" if ok else "FAIL"
        all_ok &= ok
        suffix = "" if ok else f"  ({detail})"
        lines.append(f"{status}  {name}{suffix}")
    lines.append(f"{sum(ok for _, ok, _ in checks)}/{len(checks)} checks passed")
    return "\n".join(lines) + "\n", all_ok


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on bad usage
        return int(exc.code or 0)
    try:
        if args.command == "polygon":
            text = _cmd_polygon(args)
        elif args.command == "limit-curve":
            text = _cmd_limit_curve(args)
        elif args.command == "converge":
            text = _cmd_converge(args)
        elif args.command == "curvature":
            text = _cmd_curvature(args)
        else:
            text, ok = _cmd_selftest()
            _write_artifact(text, None)
            return 0 if ok else 1
    except ValueError as exc:
        print(f"jarnik: argument error: {exc}", file=sys.stderr)
        return 2
    except ArithmeticError as exc:
        print(f"jarnik: computation failed: {exc}", file=sys.stderr)
        return 1
    output = getattr(args, "output", None)
    _write_artifact(text, output)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
