"""Quadratic fields and orders: forms, class numbers, units, varpi_m, zeta_F(-1)."""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt

from sympy import divisor_sigma, divisors

from .arith import is_squarefree, kronecker

Rational = Fraction

__all__ = [
    "Rational", "BQF", "QuadUnit", "QuadData", "kronecker", "field_disc",
    "class_number_imaginary", "fundamental_unit", "class_number_real",
    "class_number_quadratic", "varpi", "zeta_minus_one", "quad_data", "roots_of_unity",
    "format_rational",
]


def format_rational(x):
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


class BQF:
    """Primitive binary quadratic form A x^2 + B x y + C y^2."""

    __slots__ = ("A", "B", "C")

    def __init__(self, A, B, C):
        self.A, self.B, self.C = A, B, C
        d = self.disc
        if d == 0 or d % 4 not in (0, 1):
            raise ValueError(f"bad discriminant {d}")
        if gcd(gcd(A, B), C) != 1:
            raise ValueError(f"form {self.abc} is not primitive")

    @property
    def disc(self):
        return self.B * self.B - 4 * self.A * self.C

    @property
    def abc(self):
        return (self.A, self.B, self.C)

    def is_reduced(self):
        A, B, C = self.abc
        if self.disc < 0:
            return abs(B) <= A <= C and not (B < 0 and (abs(B) == A or A == C))
        D = self.disc
        return 0 < B and B * B < D and _lt_sqrt(abs(2 * A) - B, D) and _gt_sqrt(abs(2 * A) + B, D)

    def __eq__(self, other):
        return isinstance(other, BQF) and self.abc == other.abc

    def __hash__(self):
        return hash(self.abc)

    def __repr__(self):
        return f"BQF{self.abc}"


def _lt_sqrt(x, D):
    """x < sqrt(D) for integer x and non-square D > 0."""
    return x <= 0 or x * x < D


def _gt_sqrt(x, D):
    return x > 0 and x * x > D


def field_disc(m):
    return m if m % 4 == 1 else 4 * m


def roots_of_unity(m):
    """Number of roots of unity in Q(sqrt(m))."""
    return {-1: 4, -3: 6}.get(m, 2)


@lru_cache(maxsize=None)
def class_number_imaginary(disc):
    """Number of reduced primitive positive definite forms of discriminant disc."""
    if disc >= 0 or disc % 4 not in (0, 1):
        raise ValueError(f"need a negative discriminant = 0,1 mod 4, got {disc}")
    D = -disc
    h = 0
    A = 1
    while 3 * A * A <= D:
        for B in range(-A + 1, A + 1):
            if (B - disc) % 2:
                continue
            num = B * B + D
            if num % (4 * A):
                continue
            C = num // (4 * A)
            if C < A or (B < 0 and A == C):
                continue
            if gcd(gcd(A, B), C) == 1:
                h += 1
        A += 1
    return h


@dataclass(frozen=True)
class QuadUnit:
    """eps = x + y*omega with omega = (1+sqrt m)/2 if half else sqrt m."""

    m: int
    x: int
    y: int
    half: bool
    norm: int

    @property
    def coords(self):
        """(a, b) with eps = a + b sqrt(m), as Fractions."""
        if self.half:
            return Fraction(2 * self.x + self.y, 2), Fraction(self.y, 2)
        return Fraction(self.x), Fraction(self.y)

    @property
    def in_z_sqrt_m(self):
        return not self.half or self.y % 2 == 0

    def __float__(self):
        a, b = self.coords
        return float(a) + float(b) * self.m ** 0.5


def _cf_omega(m):
    """Continued fraction partial quotients of omega, as a generator."""
    if m % 4 == 1:
        P, Q, D = 1, 2, m
    else:
        P, Q, D = 0, 1, m
    r = isqrt(D)
    while True:
        a = (P + r) // Q
        yield a
        P = a * Q - P
        Q = (D - P * P) // Q


@lru_cache(maxsize=None)
def fundamental_unit(m):
    """Smallest unit > 1 of the ring of integers of Q(sqrt m), m > 1 squarefree."""
    if m <= 1 or not is_squarefree(m):
        raise ValueError(f"m={m} must be squarefree and > 1")
    half = m % 4 == 1
    c = (m - 1) // 4
    h0, h1, k0, k1 = 1, 0, 0, 1
    for a in _cf_omega(m):
        h0, h1 = a * h0 + h1, h0
        k0, k1 = a * k0 + k1, k0
        if half:
            x, y = h0 - k0, k0
            n = x * x + x * y - c * y * y
        else:
            x, y = h0, k0
            n = x * x - m * y * y
        if n in (1, -1) and y > 0:
            return QuadUnit(m, x, y, half, n)


def _reduced_indefinite(D):
    out = []
    r = isqrt(D)
    for B in range(1, r + 1):
        if (B - D) % 2 or B * B >= D:
            continue
        N = (D - B * B) // 4
        for a in divisors(N):
            a = int(a)
            if not (_gt_sqrt(2 * a + B, D) and _lt_sqrt(2 * a - B, D)):
                continue
            c = N // a
            if gcd(gcd(a, B), c) != 1:
                continue
            out.append((a, B, -c))
            out.append((-a, B, c))
    return out


def _rho(f, D):
    A, B, C = f
    r = isqrt(D)
    c2 = 2 * abs(C)
    # B' = -B mod 2|C| with sqrt(D) - 2|C| < B' < sqrt(D)
    Bp = (-B) % c2
    Bp += ((r - Bp) // c2) * c2
    while Bp > r:
        Bp -= c2
    return (C, Bp, (Bp * Bp - D) // (4 * C))


def narrow_class_number(D):
    """Number of cycles of reduced indefinite forms of non-square discriminant D > 0."""
    forms = set(_reduced_indefinite(D))
    seen = set()
    cycles = 0
    for f in sorted(forms):
        if f in seen:
            continue
        cycles += 1
        g = f
        while g not in seen:
            seen.add(g)
            g = _rho(g, D)
            if g not in forms:
                raise AssertionError(f"rho left the reduced set at {g}")
    return cycles


@lru_cache(maxsize=None)
def class_number_real(m):
    if m <= 1 or not is_squarefree(m):
        raise ValueError(f"m={m} must be squarefree and > 1")
    hp = narrow_class_number(field_disc(m))
    if fundamental_unit(m).norm == 1:
        if hp % 2:
            raise AssertionError(f"odd narrow class number {hp} with unit norm +1 (m={m})")
        return hp // 2
    return hp


def class_number_quadratic(m):
    """h(Q(sqrt m)) for squarefree m != 0, 1."""
    if m < 0:
        return class_number_imaginary(field_disc(m))
    return class_number_real(m)


def varpi(m):
    """3 / [O^x : Z[sqrt m]^x] for m = 1 mod 4."""
    if m % 4 != 1:
        raise ValueError(f"varpi needs m = 1 mod 4, got {m}")
    e = fundamental_unit(m)
    if e.in_z_sqrt_m:
        return 3
    a, b = e.coords
    # eps^3 must land in Z[sqrt m]
    a3 = a ** 3 + 3 * a * b * b * m
    b3 = 3 * a * a * b + b ** 3 * m
    if a3.denominator != 1 or b3.denominator != 1:
        raise AssertionError(f"eps^3 not in Z[sqrt {m}]")
    return 1


@lru_cache(maxsize=None)
def zeta_minus_one(m):
    """zeta_F(-1) for F = Q(sqrt m) by the finite sum over b^2 + 4ac = disc."""
    if m <= 1 or not is_squarefree(m):
        raise ValueError(f"m={m} must be squarefree and > 1")
    D = field_disc(m)
    total = 0
    b = D % 2
    while b * b < D:
        s = int(divisor_sigma((D - b * b) // 4, 1))
        total += s if b == 0 else 2 * s
        b += 2
    return Fraction(total, 60)


@dataclass(frozen=True)
class QuadData:
    m: int
    disc: int
    h: int
    fund_unit: QuadUnit = None
    unit_norm: int = None
    w: int = 2


def quad_data(m):
    if m in (0, 1) or not is_squarefree(m):
        raise ValueError(f"m={m} must be squarefree, not 0 or 1")
    if m < 0:
        return QuadData(m, field_disc(m), class_number_imaginary(field_disc(m)), w=roots_of_unity(m))
    e = fundamental_unit(m)
    return QuadData(m, field_disc(m), class_number_real(m), e, e.norm, 2)
