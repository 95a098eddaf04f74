"""Convergence experiments: scaled polygons against their limit curves.

Distance is measured from polygon vertices and edge midpoints to the
curve; scaled edges have length O(1/Q^2), so these points control the
containment of the whole polygon in a curve neighborhood.  For the
parabolic family the point-to-curve distance is computed exactly through
the stationarity cubic; the other families use a dense sample of the
eight-fold curve with the largest sample gap added as slack, which keeps
every reported number an upper bound.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np
from scipy.spatial import cKDTree

from .domains import DomainSpec, moment_integrals
from .limit_curves import LimitCurve, dihedral_images
from .polygon import ScaledPolygon, build_polygon, fundamental_vertex, scale_polygon


# ---------------------------------------------------------------------------
# Point-to-curve distance
# ---------------------------------------------------------------------------


def _poly_probe_points(poly: ScaledPolygon) -> np.ndarray:
    verts = np.asarray(poly.vertices, dtype=float)
    mids = 0.5 * (verts + np.roll(verts, 1, axis=0))
    return np.concatenate([verts, mids])


def _parabola_arc_distance(px: np.ndarray, py: np.ndarray) -> np.ndarray:
    """Exact distance to the arc y = 3x^2/4 - 1, |x| <= 2/3.

    Stationary points satisfy x^3 + P x + Q = 0 with P = -(4/9)(1+3py),
    Q = -(8/9) px; all real roots are recovered by Cardano/trigonometric
    formulas and clamped to the arc together with its endpoints.
    """
    p = -(4.0 / 9.0) * (1.0 + 3.0 * py)
    q = -(8.0 / 9.0) * px
    disc = (q / 2.0) ** 2 + (p / 3.0) ** 3

    cands = [np.full_like(px, -2.0 / 3.0), np.full_like(px, 2.0 / 3.0)]

    # single real root where disc > 0
    sq = np.sqrt(np.maximum(disc, 0.0))
    one = np.cbrt(-q / 2.0 + sq) + np.cbrt(-q / 2.0 - sq)
    cands.append(np.where(disc > 0, one, np.nan))

    # three real roots where disc <= 0 (requires p < 0)
    with np.errstate(invalid="ignore", divide="ignore"):
        m = 2.0 * np.sqrt(np.maximum(-p / 3.0, 0.0))
        ratio = np.clip(3.0 * q / np.where(p != 0, p * m, np.nan), -1.0, 1.0)
        theta = np.arccos(ratio) / 3.0
        for shift in (0.0, 2.0 * math.pi / 3.0, 4.0 * math.pi / 3.0):
            root = m * np.cos(theta - shift)
            cands.append(np.where(disc <= 0, root, np.nan))

    best = np.full(px.shape, np.inf)
    for c in cands:
        x = np.clip(c, -2.0 / 3.0, 2.0 / 3.0)
        valid = ~np.isnan(x)
        d2 = np.where(
            valid,
            (x - px) ** 2 + (0.75 * x * x - 1.0 - py) ** 2,
            np.inf,
        )
        best = np.minimum(best, d2)
    return np.sqrt(best)


def _distance_to_C(points: np.ndarray) -> np.ndarray:
    """Exact distance to the full four-arc parabolic curve."""
    best = np.full(len(points), np.inf)
    x, y = points[:, 0], points[:, 1]
    # rotate the query points into the frame of the bottom arc
    for qx, qy in ((x, y), (y, -x), (-x, -y), (-y, x)):
        best = np.minimum(best, _parabola_arc_distance(qx, qy))
    return best


def _curve_sample_cloud(curve: LimitCurve, samples: int) -> tuple[np.ndarray, float]:
    lams = np.linspace(0.0, 1.0, samples)
    arc = np.array([curve.point(l) for l in lams])
    gaps = np.linalg.norm(np.diff(arc, axis=0), axis=1)
    cloud = np.concatenate([np.asarray(img) for img in dihedral_images(arc)])
    return cloud, float(gaps.max())


def distance_to_curve(
    poly: ScaledPolygon, curve: LimitCurve, samples: int = 2**14
) -> float:
    """Upper bound on the largest distance from the polygon's vertices and
    edge midpoints to the full eight-fold curve."""
    measured, slack = distance_details(poly, curve, samples)
    return measured + slack


def distance_details(
    poly: ScaledPolygon, curve: LimitCurve, samples: int = 2**14
) -> tuple[float, float]:
    """(measured distance, sampling slack); slack is zero for the exact
    parabolic path."""
    if samples < 1000:
        raise ValueError("need at least 1000 curve samples")
    points = _poly_probe_points(poly)
    if curve.family == "C":
        return float(_distance_to_C(points).max()), 0.0
    cloud, gap = _curve_sample_cloud(curve, samples)
    dists, _ = cKDTree(cloud).query(points, k=1)
    return float(dists.max()), gap


# ---------------------------------------------------------------------------
# Convergence tables
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ConvergenceRecord:
    domain: str
    order: int
    curve: str
    sup_distance: float
    bound: float


def expected_curve(spec: DomainSpec) -> LimitCurve:
    """The limit curve proved for each region family."""
    if spec.kind == "square":
        return LimitCurve("C")
    if spec.kind == "diamond":
        return LimitCurve("C1")
    if spec.kind == "octagon":
        return LimitCurve("Cdelta", spec.param)
    return LimitCurve("Cp", spec.param)


def _canonical_curve(curve: LimitCurve) -> tuple[str, Fraction | None]:
    # the diamond curve has three equivalent descriptions
    if curve.family in ("Cdelta", "Cp") and curve.param == 1:
        return ("C1", None)
    return (curve.family, curve.param)


def check_pairing(spec: DomainSpec, curve: LimitCurve) -> None:
    if _canonical_curve(expected_curve(spec)) != _canonical_curve(curve):
        raise ValueError(
            f"domain {spec} converges to {expected_curve(spec)}, not {curve}"
        )


def convergence_table(
    spec: DomainSpec,
    q_list: Sequence[int],
    curve: LimitCurve,
    samples: int = 2**14,
    workers: int = 1,
) -> list[ConvergenceRecord]:
    """Sup-distance records along a ladder of orders, sorted by order."""
    check_pairing(spec, curve)

    def row(order: int) -> ConvergenceRecord:
        poly = scale_polygon(build_polygon(spec, order))
        measured, slack = distance_details(poly, curve, samples)
        return ConvergenceRecord(str(spec), order, str(curve), measured, measured + slack)

    orders = sorted(set(q_list))
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(row, orders))
    else:
        records = [row(q) for q in orders]
    return sorted(records, key=lambda r: r.order)


def convergence_csv(records: Sequence[ConvergenceRecord]) -> str:
    lines = ["domain,Q,curve,sup_distance,bound"]
    for r in records:
        lines.append(f"{r.domain},{r.order},{r.curve},{r.sup_distance!r},{r.bound!r}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Vertex-sum asymptotics
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LemmaRow:
    order: int
    lam: Fraction
    x_exact: int
    y_exact: int
    x_normalized_error: float  # |X pi^2/(2 lam Q^3) - 1| * Q / log Q
    y_normalized_error: float


@dataclass(frozen=True)
class LemmaReport:
    rows: tuple[LemmaRow, ...]
    max_x_error: float
    max_y_error: float

    def render(self) -> str:
        lines = ["Q,lambda,X,Y,x_err_normalized,y_err_normalized"]
        for r in self.rows:
            lines.append(
                f"{r.order},{r.lam},{r.x_exact},{r.y_exact},"
                f"{r.x_normalized_error:.6f},{r.y_normalized_error:.6f}"
            )
        lines.append(f"max_x_error,{self.max_x_error:.6f}")
        lines.append(f"max_y_error,{self.max_y_error:.6f}")
        return "\n".join(lines) + "\n"


def lemma_check(q_list: Sequence[int], lam_grid: Sequence[Fraction]) -> LemmaReport:
    """Normalized errors of the vertex sums against their main terms
    2 lam Q^3/pi^2 and lam^2 Q^3/pi^2.  Bounded normalized errors are the
    desk-scale signature of the O(Q^2 log Q) remainder."""
    if not q_list:
        raise ValueError("need at least one order")
    from .domains import square

    rows = []
    for order in sorted(set(q_list)):
        norm = order / math.log(order)
        for lam in lam_grid:
            lam = Fraction(lam)
            if not 0 < lam <= 1:
                raise ValueError("lemma grid needs slopes in (0, 1]")
            x, y = fundamental_vertex(square(), order, lam)
            xerr = abs(x * math.pi**2 / (2 * float(lam) * order**3) - 1.0) * norm
            yerr = abs(y * math.pi**2 / (float(lam) ** 2 * order**3) - 1.0) * norm
            rows.append(LemmaRow(order, lam, x, y, xerr, yerr))
    return LemmaReport(
        tuple(rows),
        max(r.x_normalized_error for r in rows),
        max(r.y_normalized_error for r in rows),
    )


def moment_route_ratio(spec: DomainSpec, order: int, lam: Fraction) -> tuple[float, float]:
    """Ratios of the exact vertex sums to the integral predictions
    Q^3/zeta(2) * (mx, my); both tend to 1."""
    x, y = fundamental_vertex(spec, order, lam)
    moments = moment_integrals(spec, lam)
    main = order**3 * 6.0 / math.pi**2
    return (x / (main * float(moments.mx)), y / (main * float(moments.my)))
