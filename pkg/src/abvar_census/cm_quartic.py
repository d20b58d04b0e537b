"""Class numbers of biquadratic CM fields K_{m,j} = Q(sqrt m, sqrt(-j))."""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .arith import as_int
from .fields import biquad_field, cyclotomic5, quadratic_field
from .quadratics import class_number_imaginary, class_number_real, field_disc, roots_of_unity


@dataclass(frozen=True)
class BiquadCM:
    m: int
    j: int
    sub_discs: tuple
    w_K: int
    Q_index: int


def subfields(m, j):
    """Discriminants of Q(sqrt m), Q(sqrt(-j)), Q(sqrt(-m j / gcd(m,j)^2))."""
    return biquad_field(m, j).sub_discs


def hasse_unit_index(m, j):
    return biquad_field(m, j).hasse_data()[0]


def biquad_cm(m, j):
    K = biquad_field(m, j)
    return BiquadCM(m, j, K.sub_discs, K.roots_of_unity()[1], K.hasse_data()[0])


@lru_cache(maxsize=None)
def class_number_cm(m, j):
    """h(K) = Q w_K h1 h2 h3 / (w1 w2) over the three quadratic subfields."""
    K = biquad_field(m, j)
    _, d1, d2 = K.subfield_params()
    Q = K.hasse_data()[0]
    w = K.roots_of_unity()[1]
    num = Q * w * class_number_imaginary(field_disc(d1)) * class_number_imaginary(field_disc(d2))
    num *= class_number_real(m)
    h = Fraction(num, roots_of_unity(d1) * roots_of_unity(d2))
    return as_int(h, f"h(K_({m},{j}))")


def weil_field(p, n):
    """The field Q(sqrt(p) zeta_n) for the dimension <= 2 classes over F_p.

    Returns a field object: quadratic for n = 4 and the two degenerate cases
    (p, n) = (2, 8), (3, 12), biquadratic otherwise, cyclotomic for (5, 5).
    """
    if n == 4:
        return quadratic_field(-p)
    if n == 8:
        return quadratic_field(-1) if p == 2 else biquad_field(2 * p, 1)
    if n == 12:
        return quadratic_field(-3) if p == 3 else biquad_field(3 * p, 3)
    if n == 3:
        return biquad_field(p, 3)
    if n == 24 and p == 2:
        return biquad_field(3, 1)
    if n == 5 and p == 5:
        return cyclotomic5()
    raise ValueError(f"no model field for sqrt({p}) zeta_{n}")


def class_number_weil_field(p, n):
    return weil_field(p, n).class_number()
