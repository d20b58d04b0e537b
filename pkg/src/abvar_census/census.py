"""Top-level counts: H(sqrt p), H_sp(pi), Delta(p), |Sp_1(F_q)|, |Sp_2(F_p)| and Mass(p)."""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .arith import as_int, kronecker
from .cm_quartic import class_number_cm, weil_field
from .dimension import enumerate_multiple
from .orders import Hsp_from_orders
from .quadratics import class_number_imaginary, class_number_real, field_disc, varpi, zeta_minus_one
from .weil import MultipleWeil, PrimePower, WeilRep

DEFERRED = "surface counts over even-exponent fields are not covered (deferred in the source theory)"

H_SQRT_SMALL = {2: 1, 3: 2, 5: 3}
DELTA_SMALL = {2: 15, 3: 20, 5: 9}


class VerificationError(AssertionError):
    """Two independent computations of the same count disagree."""


def h_neg(p):
    """h(Q(sqrt(-p)))."""
    return class_number_imaginary(field_disc(-p))


@lru_cache(maxsize=None)
def H_sqrt_p(p):
    """Number of F_p-isomorphism classes in the isogeny class of sqrt(p)."""
    if p in H_SQRT_SMALL:
        return H_SQRT_SMALL[p]
    zh = zeta_minus_one(p) * class_number_real(p)
    if p % 4 == 3:
        val = (Fraction(1, 2) * zh
               + (Fraction(3, 8) + Fraction(5, 8) * (2 - kronecker(2, p))) * class_number_cm(p, 1)
               + Fraction(1, 4) * class_number_cm(p, 2)
               + Fraction(1, 3) * class_number_cm(p, 3))
    elif p % 8 == 1:
        val = 8 * zh + class_number_cm(p, 1) + Fraction(4, 3) * class_number_cm(p, 3)
    else:
        w = varpi(p)
        val = (Fraction(15 * w + 1, 2) * zh + Fraction(3 * w + 1, 4) * class_number_cm(p, 1)
               + Fraction(4, 3) * class_number_cm(p, 3))
    h = as_int(val, f"H(sqrt {p})")
    if h < 1:
        raise AssertionError(f"H(sqrt {p}) = {h} is not positive")
    return h


def _prime_ctx(pi):
    ctx = pi.ctx
    if ctx.even:
        raise ValueError(DEFERRED)
    if ctx.a == 1:
        return pi
    # odd exponents share one classification: move to the prime field
    base = PrimePower(ctx.p, 1)
    return MultipleWeil(tuple((WeilRep(w.sign, w.n, base), m) for w, m in pi.factors))


def self_product_Hsp(w):
    """H_sp(pi_1 x pi_1) for a one-dimensional pi_1 over F_p (rank-2 lattices)."""
    p = w.ctx.p
    if w.n == 4:
        if p in (2, 3):
            return {2: 1, 3: 3}[p]
        if p % 4 == 1:
            return h_neg(p)
        return (4 - kronecker(2, p)) * h_neg(p)
    # R_sp is the maximal order of Q(i) or Q(sqrt -3); rank-2 lattices are counted by h(O_K)
    return weil_field(p, w.n).class_number()


def Hsp_tag(pi):
    (w, m), = pi.factors if len(pi.factors) == 1 else ((None, 0),)
    if m == 2:
        return "self-product"
    return "suborders"


def H_sp_of(pi):
    """Number of superspecial classes in the isogeny class pi (dimension 2, pi != sqrt p)."""
    pi = _prime_ctx(pi)
    if pi.dim != 2:
        raise ValueError(f"{pi} has dimension {pi.dim}, expected 2")
    if pi.is_simple and pi.factors[0][0].n == 1:
        raise ValueError("sqrt(p) is counted by H_sqrt_p")
    if len(pi.factors) == 1 and pi.factors[0][1] == 2:
        return self_product_Hsp(pi.factors[0][0])
    return Hsp_from_orders(pi)


def delta_formula(p):
    if p in DELTA_SMALL:
        return DELTA_SMALL[p]
    hK3, hK8 = class_number_cm(p, 3), class_number_cm(2 * p, 1)
    hK12 = class_number_cm(3 * p, 3)
    if p % 4 == 1:
        return (varpi(p) + 1) * hK3 + hK8 + hK12 + h_neg(p)
    return hK3 + hK8 + (varpi(3 * p) + 1) * hK12 + (4 - kronecker(2, p)) * h_neg(p)


def surface_classes(p):
    """MW_p(2) without sqrt(p)."""
    ctx = PrimePower(p, 1)
    return [pi for pi in enumerate_multiple(ctx, 2)
            if not (pi.is_simple and pi.factors[0][0].n == 1)]


def delta_bottom_up(p):
    return sum(H_sp_of(pi) for pi in surface_classes(p))


def delta(p, cross_check=False):
    """Delta(p): superspecial surfaces over F_p whose Frobenius is not +-sqrt(p)."""
    top = delta_formula(p)
    if cross_check:
        bottom = delta_bottom_up(p)
        if bottom != top:
            raise VerificationError(f"Delta({p}): closed form {top} != sum over classes {bottom}")
    return top


def sp2_count(ctx):
    if ctx.even:
        raise ValueError(DEFERRED)
    return H_sqrt_p(ctx.p) + delta(ctx.p)


def sp1_count(ctx):
    p = ctx.p
    if not ctx.even:
        if p in (2, 3):
            return {2: 3, 3: 4}[p]
        if p % 4 == 1:
            return h_neg(p)
        return (3 - kronecker(2, p)) * h_neg(p)
    val = (Fraction(p - 1, 6) + Fraction(8, 3) * (1 - kronecker(-3, p))
           + Fraction(3, 2) * (1 - kronecker(-4, p)))
    return as_int(val, f"|Sp_1(F_{p}^{ctx.a})|")


def sp1_unconsolidated(p):
    """h(Z[sqrt -p]) + h(O_K) for p = 3 mod 4."""
    if p % 4 != 3:
        raise ValueError("needs p = 3 mod 4")
    return class_number_imaginary(-4 * p) + class_number_imaginary(-p)


def eichler_class_number(p):
    """Class number of the definite quaternion algebra over Q ramified at p."""
    val = (Fraction(p - 1, 12) + Fraction(1, 3) * (1 - kronecker(-3, p))
           + Fraction(1, 4) * (1 - kronecker(-4, p)))
    return as_int(val, f"h(B_{p},inf)")


def curve_class_count(w):
    """H(pi) for a supersingular elliptic isogeny class."""
    ctx, p = w.ctx, w.ctx.p
    if not ctx.even:
        if w.n == 4:
            if p % 4 == 3:
                return class_number_imaginary(-4 * p) + class_number_imaginary(-p)
            return h_neg(p)
        return 1  # +-sqrt(2) zeta_8, +-sqrt(3) zeta_12: maximal orders of class number one
    if w.n == 1:
        return eichler_class_number(p)
    if w.n == 3:
        return 2 if p % 3 == 2 else 1
    if w.n == 4:
        return 2 if p % 4 == 3 else 1
    raise ValueError(f"{w} is not one-dimensional")


def mass(p):
    if p <= 5:
        raise ValueError("Mass(p) is defined for p > 5")
    zh = zeta_minus_one(p) * class_number_real(p)
    if p % 4 == 3:
        return zh / 2
    if p % 8 == 1:
        return 8 * zh
    return Fraction(15 * varpi(p) + 1, 2) * zh


def mass_ratio(p):
    return Fraction(sp2_count(PrimePower(p, 1))) / mass(p)


@dataclass
class CensusReport:
    ctx: PrimePower
    dim: int
    per_class: list = field(default_factory=list)  # (MultipleWeil, count, tag)
    total: int = 0
    mass: Fraction = None
    mass_ratio: Fraction = None
    checks: dict = field(default_factory=dict)

    @property
    def per_class_sum(self):
        return sum(c for _, c, _ in self.per_class)


def census_report(ctx, dim):
    if dim == 1:
        rows = []
        for pi in enumerate_multiple(ctx, 1):
            w = pi.factors[0][0]
            rows.append((pi, curve_class_count(w), "curve-orders"))
        return CensusReport(ctx, 1, rows, sp1_count(ctx))
    if dim != 2:
        raise ValueError("census covers dimensions 1 and 2")
    if ctx.even:
        raise ValueError(DEFERRED)
    p = ctx.p
    rows = []
    for pi in enumerate_multiple(ctx, 2):
        if pi.is_simple and pi.factors[0][0].n == 1:
            rows.append((pi, H_sqrt_p(p), "sqrt-p"))
        else:
            rows.append((pi, H_sp_of(pi), Hsp_tag(pi)))
    rep = CensusReport(ctx, 2, rows, sp2_count(ctx))
    if p > 5:
        rep.mass = mass(p)
        rep.mass_ratio = Fraction(rep.total) / rep.mass
    return rep
