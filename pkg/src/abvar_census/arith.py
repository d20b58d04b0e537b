"""Small integer helpers shared by the other modules."""

from fractions import Fraction
from math import gcd, isqrt

from sympy.ntheory import factorint, isprime, n_order, primerange
from sympy.functions.combinatorial.numbers import totient
from sympy.functions.combinatorial.numbers import kronecker_symbol


class IntegralityError(ArithmeticError):
    """A quantity that must be an integer came out fractional."""


def is_prime(n):
    # sympy runs deterministic Miller-Rabin bases below 2**64
    return n >= 2 and bool(isprime(n))


def primes_in(lo, hi):
    """Primes p with lo <= p <= hi."""
    return [int(p) for p in primerange(max(lo, 2), hi + 1)]


def phi(n):
    return int(totient(n))


def mult_order(a, n):
    return int(n_order(a, n))


def factor(n):
    return {int(p): int(e) for p, e in factorint(n).items()}


def kronecker(a, n):
    return int(kronecker_symbol(a, n))


def is_squarefree(n):
    return n != 0 and all(e == 1 for e in factor(abs(n)).values())


def squarefree_part(n):
    """Squarefree kernel with sign: n = s * f**2."""
    s = -1 if n < 0 else 1
    for p, e in factor(abs(n)).items():
        if e % 2:
            s *= p
    return s


def rational_sqrt(x):
    """Nonnegative square root of a rational, or None if it is not a square."""
    x = Fraction(x)
    if x < 0:
        return None
    a, b = x.numerator, x.denominator
    ra, rb = isqrt(a), isqrt(b)
    if ra * ra == a and rb * rb == b:
        return Fraction(ra, rb)
    return None


def as_int(x, what="value"):
    x = Fraction(x)
    if x.denominator != 1:
        raise IntegralityError(f"{what} is not an integer: {x}")
    return x.numerator


def lcm(a, b):
    return a // gcd(a, b) * b
