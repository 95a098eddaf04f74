"""The limit curves of scaled primitive-vector polygons.

Four families, each given by its fundamental arc over lam in [0, 1]:

    C        (2 lam/3, lam^2/3 - 1), an arc of y = 3x^2/4 - 1
    C1       (lam(2+lam)/(1+lam)^2, -(2 lam+1)/(1+lam)^2)
    Cdelta   the octagon family, arcs of tilted parabolas
    Cp       the l^p-ball family, built from regularized incomplete
             beta functions with mu = lam^p/(1 + lam^p)

The full curve is the orbit of the fundamental arc under the dihedral
group of order eight.  Where an algebraic form of the arc is known the
curve exposes an implicit residual for verification.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

Point = tuple[float, float]

_CF_EPS = 1e-15
_CF_MAXIT = 500
_FPMIN = 1e-300


# ---------------------------------------------------------------------------
# Beta kernel
# ---------------------------------------------------------------------------


def log_beta(a: float, b: float) -> float:
    if a <= 0 or b <= 0:
        raise ValueError("beta parameters must be positive")
    return math.lgamma(a) + math.lgamma(b) - math.lgamma(a + b)


def beta_complete(a: float, b: float) -> float:
    """Euler beta B(a, b)."""
    return math.exp(log_beta(a, b))


def _beta_continued_fraction(a: float, b: float, x: float) -> float:
    # modified Lentz iteration for the standard continued fraction of I_x
    qab, qap, qam = a + b, a + 1.0, a - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    if abs(d) < _FPMIN:
        d = _FPMIN
    d = 1.0 / d
    h = d
    for m in range(1, _CF_MAXIT + 1):
        m2 = 2 * m
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        if abs(d) < _FPMIN:
            d = _FPMIN
        c = 1.0 + aa / c
        if abs(c) < _FPMIN:
            c = _FPMIN
        d = 1.0 / d
        h *= d * c
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        if abs(d) < _FPMIN:
            d = _FPMIN
        c = 1.0 + aa / c
        if abs(c) < _FPMIN:
            c = _FPMIN
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < _CF_EPS:
            return h
    raise ArithmeticError("incomplete beta continued fraction did not converge")


def reg_inc_beta(z: float, a: float, b: float) -> float:
    """Regularized incomplete beta I_z(a, b), absolute error below 1e-12.

    The continued fraction is applied directly for z below the split point
    (a+1)/(a+b+2) and through the symmetry I_z(a,b) = 1 - I_{1-z}(b,a)
    above it, which keeps the iteration well conditioned on both sides.
    """
    if a <= 0 or b <= 0:
        raise ValueError("beta parameters must be positive")
    if not 0.0 <= z <= 1.0:
        raise ValueError("argument of I_z must lie in [0, 1]")
    if z == 0.0:
        return 0.0
    if z == 1.0:
        return 1.0
    ln_front = a * math.log(z) + b * math.log1p(-z) - log_beta(a, b)
    front = math.exp(ln_front)
    if z < (a + 1.0) / (a + b + 2.0):
        return front * _beta_continued_fraction(a, b, z) / a
    return 1.0 - front * _beta_continued_fraction(b, a, 1.0 - z) / b


def inc_beta(z: float, a: float, b: float) -> float:
    """Unregularized incomplete beta B_z(a, b)."""
    return reg_inc_beta(z, a, b) * beta_complete(a, b)


@dataclass(frozen=True)
class BetaKernel:
    """Fixed-parameter beta evaluator used by the ball-family curves."""

    a: float
    b: float

    @property
    def complete(self) -> float:
        return beta_complete(self.a, self.b)

    def incomplete(self, z: float) -> float:
        return inc_beta(z, self.a, self.b)

    def regularized(self, z: float) -> float:
        return reg_inc_beta(z, self.a, self.b)


# ---------------------------------------------------------------------------
# Parametric arcs
# ---------------------------------------------------------------------------


def _check_lambda(lam: float) -> float:
    lam = float(lam)
    if not 0.0 <= lam <= 1.0:
        raise ValueError("arc parameter must lie in [0, 1]")
    return lam


def curve_C(lam: float) -> Point:
    """Arc of y = 3x^2/4 - 1 from (0,-1) to (2/3,-2/3)."""
    lam = _check_lambda(lam)
    return (2.0 * lam / 3.0, lam * lam / 3.0 - 1.0)


def curve_C1(lam: float) -> Point:
    """Arc of sqrt(1-|x|) + sqrt(1-|y|) = 1 from (0,-1) to (3/4,-3/4)."""
    lam = _check_lambda(lam)
    den = (1.0 + lam) ** 2
    return (lam * (2.0 + lam) / den, -(2.0 * lam + 1.0) / den)


def curve_Cdelta(delta: float, lam: float) -> Point:
    """Octagon-family arc: a tilted parabola from (0,-1) to the diagonal."""
    delta = float(delta)
    if delta <= 0:
        raise ValueError("octagon shape parameter must be positive")
    lam = _check_lambda(lam)
    den = (delta + lam) ** 2 * (3.0 * delta + 1.0)
    x = lam * (2.0 * delta + lam) * (delta + 1.0) ** 2 / den
    y = delta * lam * lam * (delta + 1.0) ** 2 / den - 1.0
    return (x, y)


def curve_Cp(p: float, lam: float) -> Point:
    """Ball-family arc via regularized incomplete beta functions."""
    p = float(p)
    if p <= 0:
        raise ValueError("ball exponent must be positive")
    lam = _check_lambda(lam)
    if lam == 0.0:
        return (0.0, -1.0)
    t = lam**p
    mu = t / (1.0 + t)
    pref = math.exp(-3.0 / p * math.log1p(t))  # (1 + lam^p)^(-3/p)
    b_pp = beta_complete(1.0 / p, 2.0 / p)
    x = reg_inc_beta(mu, 1.0 / p, 1.0 + 2.0 / p) - p * lam * pref / (2.0 * b_pp)
    y = reg_inc_beta(mu, 2.0 / p, 1.0 + 1.0 / p) - p * lam * lam * pref / b_pp - 1.0
    return (x, y)


def curve_Cp_alternate_y(p: float, lam: float) -> float:
    """Second closed form of the ball-family y coordinate.

    Algebraically equal to curve_Cp(p, lam)[1] through the contiguous
    relations of I_z; kept as an independent evaluation path and checked
    against the primary one in tests.
    """
    p = float(p)
    if p <= 0:
        raise ValueError("ball exponent must be positive")
    lam = _check_lambda(lam)
    if lam == 0.0:
        return -1.0
    t = lam**p
    mu = t / (1.0 + t)
    pref = math.exp(-3.0 / p * math.log1p(t))
    b_pp = beta_complete(1.0 / p, 2.0 / p)
    return -(reg_inc_beta(1.0 - mu, 1.0 / p, 1.0 + 2.0 / p) - p * lam * lam * pref / (2.0 * b_pp))


def rotate_scale_C(point: Sequence[float]) -> Point:
    """Rotate by pi/4 and expand by 3/(2 sqrt 2); maps the curve C onto C1.

    The combined linear map is exactly (x, y) -> (3(x-y)/4, 3(x+y)/4).
    """
    x, y = point
    return (3.0 * (x - y) / 4.0, 3.0 * (x + y) / 4.0)


def curve_Cp_exact(m: int, t: Fraction) -> tuple[Fraction, Fraction]:
    """Exact arc point for p = 1/m at lam = t^m, rational in t = lam^p.

    For reciprocal-integer exponents the incomplete beta integrals are
    polynomials, so the arc is a rational function of t.  Used as an
    independent oracle for the floating-point path.
    """
    if m < 1:
        raise ValueError("m must be a positive integer")
    t = Fraction(t)
    if not 0 <= t <= 1:
        raise ValueError("t must lie in [0, 1]")
    mu = t / (1 + t)

    def inc_beta_int(z: Fraction, a: int, b: int) -> Fraction:
        # B_z(a,b) = sum_j C(b-1,j) (-1)^j z^(a+j)/(a+j)
        total = Fraction(0)
        for j in range(b):
            total += Fraction(math.comb(b - 1, j) * (-1) ** j, a + j) * z ** (a + j)
        return total

    def beta_int(a: int, b: int) -> Fraction:
        return Fraction(math.factorial(a - 1) * math.factorial(b - 1), math.factorial(a + b - 1))

    i_x = inc_beta_int(mu, m, 1 + 2 * m) / beta_int(m, 1 + 2 * m)
    i_y = inc_beta_int(mu, 2 * m, 1 + m) / beta_int(2 * m, 1 + m)
    pref = Fraction(1, 1) / (1 + t) ** (3 * m)  # (1 + lam^p)^(-3/p)
    b_pp = beta_int(m, 2 * m)
    lam = t**m
    x = i_x - Fraction(1, m) * lam * pref / (2 * b_pp)
    y = i_y - Fraction(1, m) * lam * lam * pref / b_pp - 1
    return (x, y)


# ---------------------------------------------------------------------------
# Curve objects
# ---------------------------------------------------------------------------

# fundamental arc of the p = 1/2 ball curve: irreducible quintic relation
_CP_HALF_QUINTIC: dict[tuple[int, int], int] = {
    (0, 0): -45253,
    (1, 0): 86140,
    (2, 0): -37030,
    (3, 0): -3220,
    (4, 0): -765,
    (5, 0): 128,
    (0, 1): -86140,
    (1, 1): 169060,
    (2, 1): -80340,
    (3, 1): -1940,
    (4, 1): -640,
    (0, 2): -37030,
    (1, 2): 80340,
    (2, 2): -44590,
    (3, 2): 1280,
    (0, 3): 3220,
    (1, 3): -1940,
    (2, 3): -1280,
    (0, 4): -765,
    (1, 4): 640,
    (0, 5): -128,
}


def cp_half_scaled_residual(x: float, y: float) -> float:
    """Quintic residual at (x, y), scaled by the total term magnitude."""
    num = 0.0
    scale = 0.0
    for (i, j), coef in _CP_HALF_QUINTIC.items():
        term = coef * x**i * y**j
        num += term
        scale += abs(term)
    return abs(num) / scale


def _residual_C(x: float, y: float) -> float:
    return y - (0.75 * x * x - 1.0)


def _residual_C1(x: float, y: float) -> float:
    return math.sqrt(1.0 - abs(x)) + math.sqrt(1.0 - abs(y)) - 1.0


def _make_residual_Cdelta(delta: float) -> Callable[[float, float], float]:
    def residual(x: float, y: float) -> float:
        lhs = 4.0 * delta * (1.0 + delta) ** 2 * (y + 1.0)
        rhs = (1.0 + 3.0 * delta) * (delta * x + y + 1.0) ** 2
        return lhs - rhs

    return residual


def _residual_Cp2(x: float, y: float) -> float:
    return x * x + y * y - 1.0


@dataclass(frozen=True)
class LimitCurve:
    """A limit-curve family member: parametric arc plus optional residual."""

    family: str  # "C" | "C1" | "Cdelta" | "Cp"
    param: Fraction | None = None

    def __post_init__(self) -> None:
        if self.family in ("C", "C1"):
            if self.param is not None:
                raise ValueError(f"curve {self.family} takes no parameter")
        elif self.family in ("Cdelta", "Cp"):
            if self.param is None or self.param <= 0:
                raise ValueError(f"curve {self.family} needs a positive parameter")
        else:
            raise ValueError(f"unknown curve family {self.family!r}")

    def point(self, lam: float) -> Point:
        if self.family == "C":
            return curve_C(lam)
        if self.family == "C1":
            return curve_C1(lam)
        if self.family == "Cdelta":
            return curve_Cdelta(float(self.param), lam)
        return curve_Cp(float(self.param), lam)

    def arc_start(self) -> Point:
        return (0.0, -1.0)

    def arc_end(self) -> Point:
        if self.family == "C":
            return (2.0 / 3.0, -2.0 / 3.0)
        if self.family == "C1":
            return (0.75, -0.75)
        if self.family == "Cdelta":
            d = float(self.param)
            c = (2.0 * d + 1.0) / (3.0 * d + 1.0)
            return (c, -c)
        return self.point(1.0)

    def implicit_residual(self, x: float, y: float) -> float | None:
        """Residual of the known algebraic form, None where none is known.

        For the p = 1/2 ball curve the residual is scaled (see
        cp_half_scaled_residual); elsewhere it is the plain defect.
        """
        if self.family == "C":
            return _residual_C(x, y)
        if self.family == "C1":
            return _residual_C1(x, y)
        if self.family == "Cdelta":
            return _make_residual_Cdelta(float(self.param))(x, y)
        p = self.param
        if p == 2:
            return _residual_Cp2(x, y)
        if p == 1:
            return _residual_C1(x, y)
        if p == Fraction(1, 2):
            return cp_half_scaled_residual(x, y)
        return None

    def __str__(self) -> str:
        if self.param is None:
            return self.family
        return f"{self.family}:{self.param}"


def parse_curve(text: str) -> LimitCurve:
    """Parse a curve name: ``C``, ``C1``, ``Cdelta:<d>`` or ``Cp:<p>``."""
    text = text.strip()
    if text in ("C", "C1"):
        return LimitCurve(text)
    name, sep, raw = text.partition(":")
    if sep and name in ("Cdelta", "Cp"):
        return LimitCurve(name, _parse_positive(raw))
    raise ValueError(f"unsupported curve specification: {text!r}")


def _parse_positive(raw: str) -> Fraction:
    value = Fraction(raw)  # handles both decimals and a/b
    if value <= 0:
        raise ValueError("curve parameter must be positive")
    return value


# ---------------------------------------------------------------------------
# Sampling and export
# ---------------------------------------------------------------------------


def sample_arc(curve: LimitCurve, samples: int) -> list[tuple[float, float, float]]:
    """(lam, x, y) rows on a uniform parameter grid with both endpoints."""
    if samples < 2:
        raise ValueError("need at least two samples")
    rows = []
    for i in range(samples):
        lam = i / (samples - 1)
        x, y = curve.point(lam)
        rows.append((lam, x, y))
    return rows


def dihedral_images(points: Iterable[Point]) -> list[list[Point]]:
    """The eight dihedral images of a point sequence."""
    pts = list(points)
    maps = [
        lambda x, y: (x, y),
        lambda x, y: (y, x),
        lambda x, y: (-y, x),
        lambda x, y: (-x, y),
        lambda x, y: (-x, -y),
        lambda x, y: (-y, -x),
        lambda x, y: (y, -x),
        lambda x, y: (x, -y),
    ]
    return [[m(x, y) for x, y in pts] for m in maps]


def curve_csv(curve: LimitCurve, samples: int) -> str:
    lines = ["lambda,x,y"]
    for lam, x, y in sample_arc(curve, samples):
        lines.append(f"{lam!r},{x!r},{y!r}")
    return "\n".join(lines) + "\n"


def curve_svg(curve: LimitCurve, samples: int) -> str:
    """Fundamental arc plus its eight dihedral images as a single path."""
    arc = [(x, y) for _, x, y in sample_arc(curve, samples)]
    subpaths = []
    for image in dihedral_images(arc):
        coords = " L ".join(f"{x:.6f} {-y:.6f}" for x, y in image)
        subpaths.append(f"M {coords}")
    path = " ".join(subpaths)
    return (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        '<svg xmlns="http://www.w3.org/2000/svg" viewBox="-1.2 -1.2 2.4 2.4">\n'
        f'  <path d="{path}" fill="none" stroke="black" stroke-width="0.006"/>\n'
        "</svg>\n"
    )
