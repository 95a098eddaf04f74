"""Local radii of curvature of the original (square-region) polygons.

At an irrational slope lam the fundamental arc has a unique vertex whose
two adjacent edges (q1, a1) and (q2, a2) have slopes bracketing lam; the
fractions a1/q1 < a2/q2 are consecutive order-Q Farey fractions.  The
circle through that vertex and its neighbors has the exact squared
radius

    r^2 = (a1^2 + q1^2)(a2^2 + q2^2)((a1+a2)^2 + (q1+q2)^2) / 4

by unimodularity, and the scaled radius is r / R(Q).  Everything here is
driven by the Farey/continued-fraction machinery, so a full trace over a
range of Q costs almost nothing beyond the integer arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .number_theory import (
    FareyNeighbors,
    GeneratedCF,
    QuadraticSurd,
    RationalReal,
    RealSpec,
    farey_neighbors,
    farey_neighbors_sided,
    moebius_sieve,
    totient_sieve,
)

_SQUARE_COEFF = math.pi**2 / 6.0


def circumradius_squared(
    p0: Sequence[int], p1: Sequence[int], p2: Sequence[int]
) -> Fraction:
    """Exact squared circumradius of three lattice points.

    Raises ValueError on collinear input (infinite radius).
    """
    x1, y1 = p1[0] - p0[0], p1[1] - p0[1]
    x2, y2 = p2[0] - p1[0], p2[1] - p1[1]
    cross = y2 * x1 - y1 * x2
    if cross == 0:
        raise ValueError("collinear points have no circumscribed circle")
    num = (y1 * y1 + x1 * x1) * (y2 * y2 + x2 * x2) * ((y1 + y2) ** 2 + (x1 + x2) ** 2)
    return Fraction(num, 4 * cross * cross)


def _neighbor_radius_squared(neighbors: FareyNeighbors) -> Fraction:
    a1, q1 = neighbors.left.numerator, neighbors.left.denominator
    a2, q2 = neighbors.right.numerator, neighbors.right.denominator
    num = (a1 * a1 + q1 * q1) * (a2 * a2 + q2 * q2) * ((a1 + a2) ** 2 + (q1 + q2) ** 2)
    return Fraction(num, 4)


def limit_curve_radius(lam: float) -> float:
    """Radius of curvature of the parabolic limit curve at parameter lam."""
    return (2.0 / 3.0) * (1.0 + lam * lam) ** 1.5


def predicted_radius(order: int, lam: float, q1: int, q2: int) -> float:
    """Asymptotic scaled radius q1 q2 (q1+q2)/Q^3 * pi^2 (1+lam^2)^(3/2)/6."""
    return (
        q1 * q2 * (q1 + q2) / order**3 * _SQUARE_COEFF * (1.0 + lam * lam) ** 1.5
    )


# ---------------------------------------------------------------------------
# Exact scale factors over a ladder of orders
# ---------------------------------------------------------------------------


def _sum_squares(n: int) -> int:
    return n * (n + 1) * (2 * n + 1) // 6


def _x_by_moebius(order: int, mu) -> int:
    # X(Q,1) = sum_{d<=Q} mu(d) d S2(Q//d), an exact divisor-sum identity
    total = 0
    for d in range(1, order + 1):
        m = mu[d]
        if m:
            total += m * d * _sum_squares(order // d)
    return total


def scale_ladder(q_max: int, crosscheck_every: int = 64) -> list[Fraction]:
    """R(Q) = 3 X(Q,1)/2 for Q = 0..q_max, built incrementally.

    The increment from Q-1 to Q is exactly the contribution Q phi(Q) of
    the vectors entering at denominator Q.  Every crosscheck_every steps
    the running sum is recomputed through the independent Mobius divisor
    identity to guard against drift.
    """
    if q_max < 1:
        raise ValueError("ladder top must be a positive integer")
    phi = totient_sieve(q_max)
    mu = moebius_sieve(q_max) if crosscheck_every else None
    ladder = [Fraction(0)] * (q_max + 1)
    x = 0
    for q in range(1, q_max + 1):
        x += q * phi[q]
        if crosscheck_every and q % crosscheck_every == 0:
            check = _x_by_moebius(q, mu)
            if check != x:
                raise ArithmeticError(f"scale ladder drift at Q={q}: {x} != {check}")
        ladder[q] = Fraction(3 * x, 2)
    return ladder


def square_scale_factor(order: int) -> Fraction:
    """R(Q) for the square region, exact, via the totient sieve."""
    phi = totient_sieve(order)
    return Fraction(3 * sum(q * phi[q] for q in range(1, order + 1)), 2)


# ---------------------------------------------------------------------------
# Samples and traces
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CurvatureSample:
    order: int
    lambda_spec: str
    neighbors: FareyNeighbors
    r_squared: Fraction
    r_tilde: float
    predicted: float

    @property
    def q1(self) -> int:
        return self.neighbors.left.denominator

    @property
    def q2(self) -> int:
        return self.neighbors.right.denominator

    @property
    def r(self) -> float:
        return math.sqrt(self.r_squared)


@dataclass(frozen=True)
class CurvatureBounds:
    lambda_spec: str
    lambda_value: float
    band_low: float  # pi^2/6 (1+lam^2)^(3/2)
    band_high: float  # pi^2/3 (1+lam^2)^(3/2)
    limit_radius: float  # 2/3 (1+lam^2)^(3/2)
    exact_limsup: float | None = None  # from liminf k_{n-1}/k_n when periodic


def _bounds_for(lam: RealSpec) -> CurvatureBounds:
    value = float(lam)
    shape = (1.0 + value * value) ** 1.5
    periodic = isinstance(lam, QuadraticSurd) or (
        isinstance(lam, GeneratedCF) and getattr(lam, "periodic", False)
    )
    exact = None
    if periodic:
        # liminf of k_{n-1}/k_n over the (eventual) quotient cycle
        k_prev, k = 0, 1
        ratios = []
        for i, b in enumerate(lam.quotients()):
            k_prev, k = k, b * k + k_prev
            ratios.append(k_prev / k)
            if i >= 240:
                break
        exact_liminf = min(ratios[-80:])
        exact = (2.0 + exact_liminf) / (1.0 + exact_liminf) ** 2 * _SQUARE_COEFF * shape
    return CurvatureBounds(
        str(lam),
        value,
        _SQUARE_COEFF * shape,
        2.0 * _SQUARE_COEFF * shape,
        limit_curve_radius(value),
        exact,
    )


def local_radius(
    order: int,
    lam: RealSpec | Fraction,
    side: str | None = None,
    scale: Fraction | None = None,
) -> CurvatureSample:
    """One curvature sample at a single order.

    Rational lam needs a side ('+' or '-'); irrational lam must come as an
    exact RealSpec.  Pass a precomputed scale to avoid resieving R(Q).
    """
    if order < 2:
        raise ValueError("curvature needs order >= 2")
    if isinstance(lam, Fraction) or (isinstance(lam, RealSpec) and lam.is_rational):
        frac = lam.value if isinstance(lam, RationalReal) else Fraction(lam)
        if side is None:
            raise ValueError("rational slope is two-sided; pass side='+' or side='-'")
        neighbors = farey_neighbors_sided(frac, side, order)
        spec_str = f"rat:{frac.numerator}/{frac.denominator}{side}"
        lam_value = float(frac)
    else:
        if side is not None:
            raise ValueError("side applies only to rational slopes")
        neighbors = farey_neighbors(lam, order)
        spec_str = str(lam)
        lam_value = float(lam)
    r_sq = _neighbor_radius_squared(neighbors)
    r = math.sqrt(r_sq)
    big_r = float(scale if scale is not None else square_scale_factor(order))
    return CurvatureSample(
        order,
        spec_str,
        neighbors,
        r_sq,
        r / big_r,
        predicted_radius(order, lam_value, neighbors.left.denominator, neighbors.right.denominator),
    )


def curvature_trace(
    lam: RealSpec | Fraction,
    q_min: int,
    q_max: int,
    side: str | None = None,
) -> list[CurvatureSample]:
    """One sample per integer order in [q_min, q_max]."""
    if not 2 <= q_min <= q_max:
        raise ValueError("need 2 <= q_min <= q_max")
    ladder = scale_ladder(q_max)

    rational = isinstance(lam, Fraction) or (isinstance(lam, RealSpec) and lam.is_rational)
    if rational:
        return [
            local_radius(q, lam, side=side, scale=ladder[q])
            for q in range(q_min, q_max + 1)
        ]
    if side is not None:
        raise ValueError("side applies only to rational slopes")

    # Convergent pairs (h, k) up to beyond q_max, then walk the orders with
    # the secondary-convergent rule: denominators k_n and j k_n + k_{n-1}.
    pairs = [(1, 0), (0, 1)]
    for b in lam.quotients():
        h, k = pairs[-1]
        hp, kp = pairs[-2]
        pairs.append((b * h + hp, b * k + kp))
        if pairs[-1][1] > 2 * q_max:
            break
    spec_str = str(lam)
    lam_value = float(lam)
    samples = []
    n = 1
    for q in range(q_min, q_max + 1):
        while n + 1 < len(pairs) and pairs[n + 1][1] + pairs[n][1] <= q:
            n += 1
        h, k = pairs[n]
        hp, kp = pairs[n - 1]
        j = (q - kp) // k
        f1 = Fraction(h, k)
        f2 = Fraction(j * h + hp, j * k + kp)
        if f1 > f2:
            f1, f2 = f2, f1
        neighbors = FareyNeighbors(f1, f2, q)
        r_sq = _neighbor_radius_squared(neighbors)
        samples.append(
            CurvatureSample(
                q,
                spec_str,
                neighbors,
                r_sq,
                math.sqrt(r_sq) / float(ladder[q]),
                predicted_radius(q, lam_value, f1.denominator, f2.denominator),
            )
        )
    return samples


def limsup_liminf_estimate(
    lam: RealSpec, q_max: int
) -> tuple[float, float, CurvatureBounds]:
    """Running sup and inf of the scaled radius over the window
    [q_max/4, q_max], with the theoretical band they should respect.

    These are window statistics of a finite trace, not certified limits;
    the band plays the role of the oracle.
    """
    if lam.is_rational:
        raise ValueError("limit estimates are defined for irrational slopes")
    if q_max < 8:
        raise ValueError("window too small")
    window = curvature_trace(lam, max(2, q_max // 4), q_max)
    values = [s.r_tilde for s in window]
    return (max(values), min(values), _bounds_for(lam))


# ---------------------------------------------------------------------------
# Export
# ---------------------------------------------------------------------------


def trace_csv(samples: Sequence[CurvatureSample]) -> str:
    lines = ["Q,q1,q2,r_squared_num,r_squared_den,r_tilde,predicted"]
    for s in samples:
        lines.append(
            f"{s.order},{s.q1},{s.q2},{s.r_squared.numerator},"
            f"{s.r_squared.denominator},{s.r_tilde!r},{s.predicted!r}"
        )
    return "\n".join(lines) + "\n"


def trace_svg(samples: Sequence[CurvatureSample], bounds: CurvatureBounds | None = None) -> str:
    """Step plot of the scaled radius against log Q, with the theoretical
    band and the limit-curve radius drawn as horizontal rules."""
    if not samples:
        raise ValueError("empty trace")
    xs = [math.log10(s.order) for s in samples]
    ys = [s.r_tilde for s in samples]
    x0, x1 = min(xs), max(xs)
    top = max(ys + ([bounds.band_high] if bounds else [])) * 1.05
    width, height = 640.0, 400.0

    def px(x: float) -> float:
        return (x - x0) / (x1 - x0 or 1.0) * width

    def py(y: float) -> float:
        return height - y / top * height

    steps = [f"M {px(xs[0]):.2f} {py(ys[0]):.2f}"]
    for i in range(1, len(xs)):
        steps.append(f"L {px(xs[i]):.2f} {py(ys[i - 1]):.2f}")
        steps.append(f"L {px(xs[i]):.2f} {py(ys[i]):.2f}")
    rules = ""
    if bounds is not None:
        for level, dash in (
            (bounds.band_low, "4 3"),
            (bounds.band_high, "4 3"),
            (bounds.limit_radius, "1 2"),
        ):
            y = py(level)
            rules += (
                f'  <line x1="0" y1="{y:.2f}" x2="{width}" y2="{y:.2f}" '
                f'stroke="gray" stroke-dasharray="{dash}" stroke-width="1"/>\n'
            )
    return (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {width:.0f} {height:.0f}">\n'
        f"{rules}"
        f'  <path d="{" ".join(steps)}" fill="none" stroke="black" stroke-width="1"/>\n'
        "</svg>\n"
    )
