"""The admissible symmetric regions and their wedge moment integrals.

Every region is closed, star-shaped about the origin and carries the
eight-fold dihedral symmetry of the unit square, so membership only
depends on (u, v) = (max(|x|,|y|), min(|x|,|y|)):

    square       u <= 1
    diamond      u + v <= 1
    octagon(d)   d*u + v <= d        (slopes +-d at the vertex (1,0))
    ball(p)      u^p + v^p <= 1

Lattice membership of (q/Q, a/Q) is decided in integer arithmetic; for
ball exponents whose reduced denominator is not 1 or 2 an escalating
integer-root bracketing is used, so no point is ever classified by
floating point.

The wedge S(lam) = {(x,y) in S : x > 0, 0 < y <= lam x} has closed-form
moment integrals, exact rationals for the polygonal regions and beta
functions for the balls.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .limit_curves import beta_complete, inc_beta

Rational = Union[int, Fraction]


@dataclass(frozen=True)
class DomainSpec:
    kind: str  # "square" | "diamond" | "octagon" | "ball"
    param: Fraction | None = None  # octagon slope d or ball exponent p

    def __post_init__(self) -> None:
        if self.kind in ("square", "diamond"):
            if self.param is not None:
                raise ValueError(f"{self.kind} takes no parameter")
        elif self.kind in ("octagon", "ball"):
            if self.param is None or self.param <= 0:
                raise ValueError(f"{self.kind} needs a positive parameter")
        else:
            raise ValueError(f"unknown domain kind {self.kind!r}")

    def __str__(self) -> str:
        if self.param is None:
            return self.kind
        return f"{self.kind}:{self.param}"


def square() -> DomainSpec:
    return DomainSpec("square")


def diamond() -> DomainSpec:
    return DomainSpec("diamond")


def octagon(delta: Rational | float) -> DomainSpec:
    if delta == math.inf:
        return square()
    return DomainSpec("octagon", _as_fraction(delta))


def ball(p: Rational | float) -> DomainSpec:
    if p == math.inf:
        return square()
    return DomainSpec("ball", _as_fraction(p))


def _as_fraction(value: Rational | float) -> Fraction:
    if isinstance(value, float):
        return Fraction(value)  # exact binary value of the float
    return Fraction(value)


def parse_domain(text: str) -> DomainSpec:
    """Parse ``square``, ``diamond``, ``octagon:<d>`` or ``ball:<p>``.

    Parameters may be decimals or rationals ``a/b``; ``inf`` aliases the
    square for both families.
    """
    text = text.strip()
    if text == "square":
        return square()
    if text == "diamond":
        return diamond()
    name, sep, raw = text.partition(":")
    if sep and name in ("octagon", "ball"):
        if raw == "inf":
            return square()
        value = Fraction(raw)
        return octagon(value) if name == "octagon" else ball(value)
    raise ValueError(f"unsupported domain specification: {text!r}")


# ---------------------------------------------------------------------------
# Membership
# ---------------------------------------------------------------------------


def _iroot_floor(x: int, k: int) -> int:
    """floor(x ** (1/k)) for x >= 0 by Newton iteration on integers."""
    if x < 0:
        raise ValueError("negative radicand")
    if x == 0:
        return 0
    if k == 1:
        return x
    if k == 2:
        return math.isqrt(x)
    guess = 1 << ((x.bit_length() + k - 1) // k)
    while True:
        nxt = ((k - 1) * guess + x // guess ** (k - 1)) // k
        if nxt >= guess:
            break
        guess = nxt
    while guess**k > x:
        guess -= 1
    return guess


def _ball_sum_within(A: int, B: int, C: int, b: int) -> bool:
    """Decide A^(1/b) + B^(1/b) <= C^(1/b) for nonnegative integers, exactly.

    b = 1 and b = 2 reduce to polynomial comparisons.  Otherwise perfect
    b-th powers are compared directly and the rest is settled by scaled
    integer roots at escalating precision; the loop can only stall on an
    exact boundary, which for roots this shape means rational roots, and
    those are caught by the perfect-power test.
    """
    if b == 1:
        return A + B <= C
    if b == 2:
        # sqrt(A) + sqrt(B) <= sqrt(C)  <=>  C - A - B >= 0 and 4AB <= (C-A-B)^2
        gap = C - A - B
        return gap >= 0 and 4 * A * B <= gap * gap
    ra, rb, rc = (_iroot_floor(v, b) for v in (A, B, C))
    if ra**b == A and rb**b == B and rc**b == C:
        return ra + rb <= rc
    for bits in (32, 64, 128, 256, 512, 1024, 4096):
        scale = 1 << bits
        sb = scale**b
        lo = _iroot_floor(A * sb, b) + _iroot_floor(B * sb, b)  # <= scale * (A^(1/b)+B^(1/b))
        hi = lo + 2  # floor roots each undershoot by < 1
        rc_lo = _iroot_floor(C * sb, b)
        if hi <= rc_lo:
            return True
        if lo > rc_lo + 1:
            return False
    raise ArithmeticError("membership comparison did not separate; boundary case")


def lattice_contains(spec: DomainSpec, q: int, a: int, order: int) -> bool:
    """Whether (q/order, a/order) lies in the (closed) region."""
    u, v = abs(q), abs(a)
    if u < v:
        u, v = v, u
    if spec.kind == "square":
        return u <= order
    if spec.kind == "diamond":
        return u + v <= order
    if spec.kind == "octagon":
        dn, dd = spec.param.numerator, spec.param.denominator
        return dn * u + dd * v <= dn * order
    pn, pd = spec.param.numerator, spec.param.denominator
    return _ball_sum_within(u**pn, v**pn, order**pn, pd)


def contains(spec: DomainSpec, x: Rational, y: Rational) -> bool:
    """Whether the rational point (x, y) lies in the (closed) region."""
    fx, fy = Fraction(x), Fraction(y)
    den = math.lcm(fx.denominator, fy.denominator)
    return lattice_contains(spec, int(fx * den), int(fy * den), den)


# ---------------------------------------------------------------------------
# Moment integrals over the wedge S(lam)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MomentPair:
    """Integrals of x and of y over the wedge S(lam)."""

    mx: Fraction | float
    my: Fraction | float


def moment_integrals(spec: DomainSpec, lam: Rational | float) -> MomentPair:
    """Closed-form wedge moments.

    Polygonal regions give exact rationals for rational lam; balls are
    evaluated in floating point through the incomplete beta function with
    mu = lam^p/(1 + lam^p).
    """
    if spec.kind == "ball":
        lamf = float(lam)
        if not 0.0 <= lamf <= 1.0:
            raise ValueError("wedge slope must lie in [0, 1]")
        p = float(spec.param)
        if lamf == 0.0:
            return MomentPair(0.0, 0.0)
        t = lamf**p
        mu = t / (1.0 + t)
        pref = math.exp(-3.0 / p * math.log1p(t))  # (1 + lam^p)^(-3/p)
        mx = inc_beta(mu, 1.0 / p, 1.0 + 2.0 / p) / (2.0 * p) - lamf * pref / 6.0
        my = inc_beta(mu, 2.0 / p, 1.0 + 1.0 / p) / p - lamf * lamf * pref / 3.0
        return MomentPair(mx, my)

    lamq = Fraction(lam) if not isinstance(lam, float) else Fraction(lam)
    if not 0 <= lamq <= 1:
        raise ValueError("wedge slope must lie in [0, 1]")
    if spec.kind == "square":
        return MomentPair(lamq / 3, lamq * lamq / 6)
    if spec.kind == "diamond":
        den = 6 * (1 + lamq) ** 2
        return MomentPair(lamq * (2 + lamq) / den, lamq * lamq / den)
    d = spec.param
    den = 6 * (d + lamq) ** 2
    return MomentPair(d * lamq * (2 * d + lamq) / den, d * d * lamq * lamq / den)


def scale_factor_asymptote(spec: DomainSpec) -> float:
    """Coefficient c with R(Q) ~ c Q^3, namely 6 (mx(1) + my(1)) / pi^2.

    Square 3/pi^2, diamond 1/pi^2, octagon d(3d+1)/(pi^2 (d+1)^2), ball
    2 B(1/p, 2/p)/(p pi^2).
    """
    if spec.kind == "ball":
        p = float(spec.param)
        return 2.0 * beta_complete(1.0 / p, 2.0 / p) / (p * math.pi**2)
    moments = moment_integrals(spec, 1)
    return float(6 * (moments.mx + moments.my)) / math.pi**2
