"""Convex polygons whose edges are the primitive vectors of a region.

For a region S and order Q, the edge set is every integer vector (q, a)
with gcd(q, a) = 1 and (q/Q, a/Q) in S.  Walking those vectors in
counterclockwise order yields the unique (up to translation) convex
polygon with that edge multiset.  The polygon is anchored so that the
right-hand endpoint of the (1, 0) edge is the origin; the scaled copy is
translated to be centered at the origin and shrunk by the exact factor
R = X(Q,1) + Y(Q,1) - 1/2, after which (0, -1) is the midpoint of the
(1, 0) edge.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

from .domains import DomainSpec, lattice_contains
from .number_theory import RationalReal, RealSpec


class PrimitiveVector(NamedTuple):
    q: int
    a: int


Vec = PrimitiveVector


def primitive_vectors(spec: DomainSpec, order: int) -> list[PrimitiveVector]:
    """All primitive vectors (q, a) with (q/Q, a/Q) in the region."""
    if order < 1:
        raise ValueError("order must be a positive integer")
    gcd = math.gcd
    found: list[PrimitiveVector] = []
    for q in range(-order, order + 1):
        for a in range(-order, order + 1):
            if (q or a) and gcd(q, a) == 1 and lattice_contains(spec, q, a, order):
                found.append(PrimitiveVector(q, a))
    return found


def _sector(v: PrimitiveVector) -> int:
    # 0: along +x, 1: upper half plane, 2: along -x, 3: lower half plane
    if v.a == 0:
        return 0 if v.q > 0 else 2
    return 1 if v.a > 0 else 3


def _angle_key(v: PrimitiveVector) -> tuple[int, Fraction]:
    # Within an open half plane the angle increases with -cot = -q/a,
    # and the same expression orders the lower half plane as well.
    if v.a == 0:
        return (_sector(v), Fraction(0))
    return (_sector(v), Fraction(-v.q, v.a))


def sort_ccw(vectors: Sequence[PrimitiveVector]) -> list[PrimitiveVector]:
    """Counterclockwise angular order starting from the direction (1, 0).

    Purely integer comparisons (half-plane index, then exact slope); a
    repeated direction cannot occur among primitive vectors and is
    reported as an internal error.
    """
    ordered = sorted(vectors, key=_angle_key)
    for prev, cur in zip(ordered, ordered[1:]):
        if _angle_key(prev) == _angle_key(cur):
            raise ValueError(f"duplicate direction: {prev} and {cur}")
    return ordered


@dataclass(frozen=True)
class LatticePolygon:
    """Exact-integer vertex cycle; edge i runs from vertices[i-1] to
    vertices[i], and the edge into vertices[0] is (1, 0)."""

    vertices: tuple[tuple[int, int], ...]
    order: int
    domain: DomainSpec

    def edges(self) -> list[PrimitiveVector]:
        verts = self.vertices
        out = []
        for i, (x, y) in enumerate(verts):
            px, py = verts[i - 1]
            out.append(PrimitiveVector(x - px, y - py))
        return out

    def is_convex(self) -> bool:
        es = self.edges()
        return all(
            e1.q * e2.a - e1.a * e2.q > 0 for e1, e2 in zip(es, es[1:] + es[:1])
        )


def build_polygon(spec: DomainSpec, order: int) -> LatticePolygon:
    vectors = sort_ccw(primitive_vectors(spec, order))
    start = vectors.index(PrimitiveVector(1, 0))
    vectors = vectors[start:] + vectors[:start]
    verts = []
    x, y = -1, 0  # so the (1,0) edge ends at the origin
    for q, a in vectors:
        x += q
        y += a
        verts.append((x, y))
    if verts[-1] != (-1, 0):
        raise ValueError("edge vectors do not close up; region not symmetric")
    return LatticePolygon(tuple(verts), order, spec)


def _slope_floor(lam: RealSpec | Fraction | int | float, q: int) -> int:
    if isinstance(lam, RealSpec):
        return lam.floor_scaled(q)
    return RationalReal(Fraction(lam)).floor_scaled(q)


def _domain_row_cap(spec: DomainSpec, order: int, q: int) -> int:
    """Largest a in [0, q] with (q/Q, a/Q) in the region, assuming a <= q."""
    if spec.kind == "square":
        return q
    if spec.kind == "diamond":
        return order - q
    if spec.kind == "octagon":
        dn, dd = spec.param.numerator, spec.param.denominator
        return (dn * (order - q)) // dd
    a = min(q, int((max(order**float(spec.param) - q ** float(spec.param), 0.0)) ** (1.0 / float(spec.param))))
    while a > 0 and not lattice_contains(spec, q, a, order):
        a -= 1
    while a < q and lattice_contains(spec, q, a + 1, order):
        a += 1
    return a


def fundamental_vertex(
    spec: DomainSpec, order: int, lam: RealSpec | Fraction | int | float
) -> tuple[int, int]:
    """The vertex reached by summing the region's primitive vectors with
    positive coordinates and slope at most lam, as exact integers."""
    if order < 1:
        raise ValueError("order must be a positive integer")
    gcd = math.gcd
    x = y = 0
    for q in range(1, order + 1):
        cap = _domain_row_cap(spec, order, q)
        top = min(_slope_floor(lam, q), cap)
        count = 0
        asum = 0
        for a in range(1, top + 1):
            if gcd(q, a) == 1:
                count += 1
                asum += a
        x += q * count
        y += asum
    return (x, y)


@dataclass(frozen=True)
class ScaledPolygon:
    """Real vertex cycle of the rescaled polygon, centered at the origin;
    scale is the exact half-integer R kept as a Fraction."""

    vertices: tuple[tuple[float, float], ...]
    scale: Fraction
    order: int
    domain: DomainSpec


def scale_factor(spec: DomainSpec, order: int) -> Fraction:
    """R = X(Q,1) + Y(Q,1) - 1/2, exact."""
    x1, y1 = fundamental_vertex(spec, order, 1)
    return Fraction(2 * (x1 + y1) - 1, 2)


def scale_polygon(polygon: LatticePolygon) -> ScaledPolygon:
    r = scale_factor(polygon.domain, polygon.order)
    if r <= 0:
        raise ValueError("degenerate polygon: nonpositive scale factor")
    rf = float(r)
    verts = tuple(((x + 0.5) / rf, (y - rf) / rf) for x, y in polygon.vertices)
    return ScaledPolygon(verts, r, polygon.order, polygon.domain)


# ---------------------------------------------------------------------------
# Export
# ---------------------------------------------------------------------------


def polygon_csv(polygon: LatticePolygon | ScaledPolygon) -> str:
    lines = ["x,y"]
    for x, y in polygon.vertices:
        lines.append(f"{x!r},{y!r}")
    return "\n".join(lines) + "\n"


def polygon_svg(polygon: LatticePolygon | ScaledPolygon) -> str:
    """A single closed polyline; scaled polygons use the fixed unit frame."""
    verts = polygon.vertices
    if isinstance(polygon, ScaledPolygon):
        viewbox = "-1.2 -1.2 2.4 2.4"
        width = 0.006
    else:
        xs = [v[0] for v in verts]
        ys = [v[1] for v in verts]
        pad = max(2, (max(xs) - min(xs)) // 20)
        viewbox = (
            f"{min(xs) - pad} {-max(ys) - pad} "
            f"{max(xs) - min(xs) + 2 * pad} {max(ys) - min(ys) + 2 * pad}"
        )
        width = max((max(xs) - min(xs)) / 400.0, 0.05)
    coords = " L ".join(f"{x:.6f} {-y:.6f}" for x, y in verts)
    return (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="{viewbox}">\n'
        f'  <path d="M {coords} Z" fill="none" stroke="black" stroke-width="{width}"/>\n'
        "</svg>\n"
    )
