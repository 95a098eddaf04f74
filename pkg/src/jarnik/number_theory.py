"""Exact integer number theory.

Mobius sieve, Farey sequences and neighbor queries, continued fractions
with convergents and secondary convergents, plus exact specifications of
real numbers (rationals, quadratic surds, pattern-generated continued
fractions) so that ordering questions against fractions are decided with
integer arithmetic only, never floating point.

Conventions used throughout: a number x in (0,1) has the continued
fraction x = [0; b_1, b_2, ...] with positive integer partial quotients,
and the convergents h_n/k_n follow

    h_0 = 1, h_1 = 0, h_{n+1} = b_n h_n + h_{n-1}
    k_0 = 0, k_1 = 1, k_{n+1} = b_n k_n + k_{n-1}

so the first convergent listed is h_1/k_1 = 0/1.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator, Sequence


# ---------------------------------------------------------------------------
# Mobius function
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MoebiusTable:
    """Values of mu(n) for 1 <= n <= limit, immutable after construction."""

    limit: int
    values: tuple[int, ...]  # values[n] = mu(n); index 0 unused

    def __getitem__(self, n: int) -> int:
        if not 1 <= n <= self.limit:
            raise IndexError(f"mu({n}) outside sieve range 1..{self.limit}")
        return self.values[n]


def moebius_sieve(limit: int) -> MoebiusTable:
    """Sieve mu(1..limit) with a linear prime sieve.

    mu(1) = 1; mu(n) = 0 when a prime square divides n; otherwise
    (-1)^(number of prime factors).
    """
    if limit < 1:
        raise ValueError("sieve limit must be a positive integer")
    mu = [0] * (limit + 1)
    mu[1] = 1
    is_comp = bytearray(limit + 1)
    primes: list[int] = []
    for i in range(2, limit + 1):
        if not is_comp[i]:
            primes.append(i)
            mu[i] = -1
        for p in primes:
            ip = i * p
            if ip > limit:
                break
            is_comp[ip] = 1
            if i % p == 0:
                mu[ip] = 0
                break
            mu[ip] = -mu[i]
    return MoebiusTable(limit, tuple(mu))


def totient_sieve(limit: int) -> list[int]:
    """phi(0..limit) as a list (phi[0] = 0)."""
    if limit < 1:
        raise ValueError("sieve limit must be a positive integer")
    phi = list(range(limit + 1))
    for p in range(2, limit + 1):
        if phi[p] == p:  # p prime
            for m in range(p, limit + 1, p):
                phi[m] -= phi[m] // p
    return phi


def partial_zeta_inverse(order: int) -> Fraction:
    """Exact value of sum_{q <= order} mu(q)/q^2.

    Tends to 6/pi^2 with tail below 1/order.  Computed over the common
    denominator lcm(1..order)^2 so no intermediate reduction is needed.
    """
    mu = moebius_sieve(order)
    lcm = 1
    for q in range(2, order + 1):
        lcm = math.lcm(lcm, q)
    big = lcm * lcm
    total = 0
    for q in range(1, order + 1):
        m = mu[q]
        if m:
            total += m * (big // (q * q))
    return Fraction(total, big)


# ---------------------------------------------------------------------------
# Farey sequences
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FareyNeighbors:
    """Consecutive fractions of a Farey sequence bracketing some value."""

    left: Fraction
    right: Fraction
    order: int

    def __post_init__(self) -> None:
        a1, q1 = self.left.numerator, self.left.denominator
        a2, q2 = self.right.numerator, self.right.denominator
        if a2 * q1 - a1 * q2 != 1:
            raise ValueError(f"{self.left} and {self.right} are not unimodular")
        if q1 > self.order or q2 > self.order:
            raise ValueError("neighbor denominator exceeds the Farey order")


def farey_sequence(order: int) -> list[Fraction]:
    """All reduced fractions in [0,1] with denominator <= order, increasing."""
    if order < 1:
        raise ValueError("Farey order must be a positive integer")
    seq = [Fraction(0, 1), Fraction(1, order)]
    a, b = 0, 1
    c, d = 1, order
    while c < d:
        k = (order + b) // d
        a, b, c, d = c, d, k * c - a, k * d - b
        seq.append(Fraction(c, d))
    return seq


# ---------------------------------------------------------------------------
# Exact real specifications
# ---------------------------------------------------------------------------


class RealSpec:
    """A real number given exactly, supporting integer-only comparisons.

    Subclasses implement cmp() against rationals and, for irrationals, a
    stream of continued fraction partial quotients.
    """

    is_rational = False

    def cmp(self, frac: Fraction) -> int:
        """Sign of (self - frac): -1, 0 or +1, decided exactly."""
        raise NotImplementedError

    def quotients(self) -> Iterator[int]:
        """Partial quotients b_1, b_2, ... of self = [0; b_1, b_2, ...]."""
        raise NotImplementedError

    def __float__(self) -> float:
        raise NotImplementedError

    def floor_scaled(self, q: int) -> int:
        """floor(self * q) for a positive integer q, exact."""
        if q < 1:
            raise ValueError("scale must be a positive integer")
        a = int(float(self) * q)  # seed, then correct with exact comparisons
        while a > 0 and self.cmp(Fraction(a, q)) < 0:
            a -= 1
        while self.cmp(Fraction(a + 1, q)) >= 0:
            a += 1
        return a


@dataclass(frozen=True)
class RationalReal(RealSpec):
    value: Fraction

    is_rational = True

    def cmp(self, frac: Fraction) -> int:
        d = self.value - frac
        return (d > 0) - (d < 0)

    def quotients(self) -> Iterator[int]:
        # Euclid on value in (0,1); terminates, final quotient >= 2 except for 0/1
        num, den = self.value.numerator, self.value.denominator
        while num:
            b, rem = divmod(den, num)
            yield b
            num, den = rem, num

    def floor_scaled(self, q: int) -> int:
        return (self.value.numerator * q) // self.value.denominator

    def __float__(self) -> float:
        return float(self.value)

    def __str__(self) -> str:
        return f"rat:{self.value.numerator}/{self.value.denominator}"


def _floor_quadratic(p: int, d: int, q: int) -> int:
    """floor((p + sqrt(d))/q) for non-square d >= 0 and q != 0, exact."""
    s = math.isqrt(d)
    if q > 0:
        return (p + s) // q
    # d non-square makes (p + sqrt(d)) irrational, so the ceiling is floor+1
    return -((p + s) // (-q) + 1)


@dataclass(frozen=True)
class QuadraticSurd(RealSpec):
    """The number (p + sqrt(d))/q with integer data, d not a perfect square."""

    p: int
    d: int
    q: int

    def __post_init__(self) -> None:
        if self.q == 0:
            raise ValueError("denominator of a surd must be nonzero")
        if self.d < 0:
            raise ValueError("radicand must be nonnegative")
        if math.isqrt(self.d) ** 2 == self.d:
            raise ValueError("radicand is a perfect square; use a rational spec")

    def cmp(self, frac: Fraction) -> int:
        # sign of (p + sqrt(d))/q - a/b via sign of (bp - aq + b sqrt(d)) * sign(bq)
        a, b = frac.numerator, frac.denominator
        t = a * self.q - b * self.p  # compare b*sqrt(d) against t
        if t < 0:
            num_sign = 1
        else:
            lhs = b * b * self.d
            rhs = t * t
            num_sign = (lhs > rhs) - (lhs < rhs)
        q_sign = 1 if self.q > 0 else -1
        return num_sign * q_sign

    def quotients(self) -> Iterator[int]:
        # integer PQa recurrence; rescale first so that q | d - p^2
        p, d, q = self.p, self.d, self.q
        if (d - p * p) % q:
            p, d, q = p * abs(q), d * q * q, q * abs(q)
        b0 = _floor_quadratic(p, d, q)
        if b0 != 0:
            raise ValueError("quotient stream requires a value in (0, 1)")
        while True:
            p = b0 * q - p
            q = (d - p * p) // q
            b0 = _floor_quadratic(p, d, q)
            yield b0

    def floor_scaled(self, q: int) -> int:
        return _floor_quadratic(self.p * q, self.d * q * q, self.q)

    def __float__(self) -> float:
        return (self.p + math.sqrt(self.d)) / self.q

    def __str__(self) -> str:
        return f"surd:({self.p}+sqrt({self.d}))/{self.q}"


@dataclass(frozen=True)
class GeneratedCF(RealSpec):
    """Irrational in (0,1) given by a generator of its partial quotients."""

    name: str
    factory: Callable[[], Iterator[int]] = field(compare=False)
    periodic: bool = False  # quotients eventually cycle

    def cmp(self, frac: Fraction) -> int:
        # Consecutive convergents bracket the value strictly; refine until
        # the query fraction falls outside the bracket.
        a, b = frac.numerator, frac.denominator
        h_prev, k_prev, h, k = 1, 0, 0, 1
        for quot in self.factory():
            h_prev, h = h, quot * h + h_prev
            k_prev, k = k, quot * k + k_prev
            lo_n, lo_d, hi_n, hi_d = h_prev, k_prev, h, k
            if lo_n * hi_d > hi_n * lo_d:
                lo_n, lo_d, hi_n, hi_d = hi_n, hi_d, lo_n, lo_d
            if a * lo_d <= lo_n * b:
                return 1  # value > lo >= frac
            if a * hi_d >= hi_n * b:
                return -1
        raise ValueError(f"quotient stream for {self.name} terminated; not irrational")

    def quotients(self) -> Iterator[int]:
        return self.factory()

    def __float__(self) -> float:
        h_prev, k_prev, h, k = 1, 0, 0, 1
        for quot in self.factory():
            h_prev, h = h, quot * h + h_prev
            k_prev, k = k, quot * k + k_prev
            if k > 1 << 40:
                break
        return h / k

    def __str__(self) -> str:
        return self.name


def _e_minus_2_quotients() -> Iterator[int]:
    # [0; 1, 2, 1, 1, 4, 1, 1, 6, 1, 1, 8, ...]
    yield 1
    even = 2
    while True:
        yield even
        yield 1
        yield 1
        even += 2


def _periodic_quotients(head: Sequence[int], cycle: Sequence[int]) -> Iterator[int]:
    yield from head
    while True:
        yield from cycle


E_MINUS_2 = GeneratedCF("const:e-2", _e_minus_2_quotients)
INV_SQRT3 = QuadraticSurd(0, 3, 3)  # 1/sqrt(3) = sqrt(3)/3

_CF_LITERAL = re.compile(r"^cf:\[0;([0-9,]*)(?:\(([0-9,]+)\))?\]$")
_SURD = re.compile(r"^surd:\((-?\d+)\+sqrt\((\d+)\)\)/(-?\d+)$")


def parse_real(text: str) -> RealSpec:
    """Parse the exact-number grammar.

    Accepted forms: ``rat:a/b``, ``surd:(P+sqrt(D))/Q``, ``const:e-2``,
    ``const:inv-sqrt3``, and ``cf:[0;b1,b2,...,(p1,p2,...)]`` where the
    parenthesised tail repeats forever.
    """
    text = text.strip()
    if text.startswith("rat:"):
        body = text[4:]
        num, _, den = body.partition("/")
        value = Fraction(int(num), int(den)) if den else Fraction(int(num))
        return RationalReal(value)
    if text == "const:e-2":
        return E_MINUS_2
    if text == "const:inv-sqrt3":
        return INV_SQRT3
    m = _SURD.match(text)
    if m:
        return QuadraticSurd(int(m.group(1)), int(m.group(2)), int(m.group(3)))
    m = _CF_LITERAL.match(text)
    if m:
        head = tuple(int(t) for t in m.group(1).split(",") if t)
        cycle = tuple(int(t) for t in m.group(2).split(",")) if m.group(2) else ()
        if any(b < 1 for b in head + cycle):
            raise ValueError("partial quotients must be positive")
        if cycle:
            return GeneratedCF(text, lambda: _periodic_quotients(head, cycle), periodic=True)
        if not head:
            raise ValueError("empty continued fraction literal")
        value = Fraction(0)
        for b in reversed(head):
            value = Fraction(1, b + value)
        return RationalReal(value)
    raise ValueError(f"unsupported real specification: {text!r}")


# ---------------------------------------------------------------------------
# Continued fractions and convergents
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ContinuedFraction:
    """A prefix of the expansion [0; b_1, b_2, ...].

    ``terminated`` marks rational inputs whose expansion ended before the
    requested number of quotients.
    """

    kind: str  # "rational" | "periodic-quadratic" | "pattern-generated"
    partial_quotients: tuple[int, ...]
    terminated: bool = False

    def convergent_pairs(self) -> list[tuple[int, int]]:
        """(h_n, k_n) for n = 1, 2, ... derived from the stored quotients."""
        h_prev, k_prev, h, k = 1, 0, 0, 1
        pairs = [(h, k)]
        for b in self.partial_quotients:
            h_prev, h = h, b * h + h_prev
            k_prev, k = k, b * k + k_prev
            pairs.append((h, k))
        return pairs


def cf_expand(x: RealSpec | Fraction, n_terms: int) -> ContinuedFraction:
    """First n_terms partial quotients of x in (0,1), computed exactly."""
    if n_terms < 1:
        raise ValueError("need at least one partial quotient")
    spec = RationalReal(Fraction(x)) if isinstance(x, (Fraction, int)) else x
    if spec.cmp(Fraction(0)) <= 0 or spec.cmp(Fraction(1)) >= 0:
        raise ValueError("continued fraction expansion requires x in (0, 1)")
    quots: list[int] = []
    terminated = False
    stream = spec.quotients()
    for _ in range(n_terms):
        try:
            quots.append(next(stream))
        except StopIteration:
            terminated = True
            break
    if isinstance(spec, RationalReal):
        kind = "rational"
    elif isinstance(spec, QuadraticSurd):
        kind = "periodic-quadratic"
    else:
        kind = "pattern-generated"
    return ContinuedFraction(kind, tuple(quots), terminated)


def convergents(cf: ContinuedFraction, count: int | None = None) -> list[Fraction]:
    """Convergents h_1/k_1, h_2/k_2, ... from the stored quotients."""
    pairs = cf.convergent_pairs()
    if count is not None:
        pairs = pairs[:count]
    return [Fraction(h, k) for h, k in pairs]


# ---------------------------------------------------------------------------
# Farey neighbors
# ---------------------------------------------------------------------------


def _neighbors_from_pair(f1: Fraction, f2: Fraction, order: int) -> FareyNeighbors:
    if f1 > f2:
        f1, f2 = f2, f1
    return FareyNeighbors(f1, f2, order)


def farey_neighbors(lam: RealSpec, order: int) -> FareyNeighbors:
    """The two consecutive order-Q Farey fractions around irrational lam.

    Uses the convergent/secondary-convergent description: with j k_n +
    k_{n-1} <= Q < (j+1) k_n + k_{n-1} and 1 <= j <= b_n, the bracketing
    denominators are k_n and j k_n + k_{n-1}.
    """
    if order < 1:
        raise ValueError("Farey order must be a positive integer")
    if lam.is_rational:
        raise ValueError("rational cut point; use farey_neighbors_sided")
    if lam.cmp(Fraction(0)) <= 0 or lam.cmp(Fraction(1)) >= 0:
        raise ValueError("neighbor query requires lam in (0, 1)")
    h_prev, k_prev, h, k = 1, 0, 0, 1
    for b in lam.quotients():
        h_next, k_next = b * h + h_prev, b * k + k_prev
        if k_next + k > order:
            break
        h_prev, k_prev, h, k = h, k, h_next, k_next
    j = (order - k_prev) // k
    primary = Fraction(h, k)
    secondary = Fraction(j * h + h_prev, j * k + k_prev)
    return _neighbors_from_pair(primary, secondary, order)


def farey_neighbors_stern_brocot(lam: RealSpec, order: int) -> FareyNeighbors:
    """Same query as farey_neighbors, by mediant descent from (0/1, 1/1)."""
    if order < 1:
        raise ValueError("Farey order must be a positive integer")
    if lam.is_rational:
        raise ValueError("rational cut point; use farey_neighbors_sided")
    lo_n, lo_d, hi_n, hi_d = 0, 1, 1, 1
    while True:
        med_n, med_d = lo_n + hi_n, lo_d + hi_d
        if med_d > order:
            break
        if lam.cmp(Fraction(med_n, med_d)) > 0:
            lo_n, lo_d = med_n, med_d
        else:
            hi_n, hi_d = med_n, med_d
    return FareyNeighbors(Fraction(lo_n, lo_d), Fraction(hi_n, hi_d), order)


def farey_neighbors_sided(lam: Fraction, side: str, order: int) -> FareyNeighbors:
    """Neighbor pair at a rational point: (lam, successor) or (predecessor, lam)."""
    if side not in ("+", "-"):
        raise ValueError("side must be '+' or '-'")
    if not 0 <= lam <= 1:
        raise ValueError("rational cut point must lie in [0, 1]")
    a, b = lam.numerator, lam.denominator
    if b > order:
        raise ValueError(f"denominator of {lam} exceeds Farey order {order}")
    if side == "+":
        if lam == 1:
            raise ValueError("1/1 has no successor in [0, 1]")
        if b == 1:  # lam = 0/1
            return FareyNeighbors(lam, Fraction(1, order), order)
        # successor c/d satisfies c*b - a*d = 1 with the largest d <= order
        d = -pow(a, -1, b) % b
        d += ((order - d) // b) * b
        c = (a * d + 1) // b
        return FareyNeighbors(lam, Fraction(c, d), order)
    if lam == 0:
        raise ValueError("0/1 has no predecessor in [0, 1]")
    if b == 1:  # lam = 1/1
        return FareyNeighbors(Fraction(order - 1, order), lam, order)
    # predecessor c/d satisfies a*d - c*b = 1 with the largest d <= order
    d = pow(a, -1, b) % b
    d += ((order - d) // b) * b
    c = (a * d - 1) // b
    return FareyNeighbors(Fraction(c, d), lam, order)
