"""Dimensions d(pi) of simple supersingular classes and enumeration of W_q(d), MW_q(d)."""

from dataclasses import dataclass
from functools import lru_cache

from .arith import mult_order, phi
from .weil import MultipleWeil, WeilRep, enumerate_Wss

REAL_EVEN = "REAL_EVEN"
REAL_ODD = "REAL_ODD"
CM_F = "CM_F"
CM_Q = "CM_Q"

# for d <= 4 every simple class has n <= 60
COMPLETE_BOUND = 60


@dataclass(frozen=True)
class DimData:
    weil: WeilRep
    dim: int
    case_tag: str
    field_degree: int


def euler_phi(n):
    if n < 1:
        raise ValueError("n must be >= 1")
    return phi(n)


def condition_F_even(n, p):
    """Whether End^0 is the field Q(zeta_n) itself (even exponent, n >= 3)."""
    if n % p == 0:
        return True
    return mult_order(p, n) % 2 == 0


@lru_cache(maxsize=None)
def _dim(sign, n, p, even):
    if n == 1:
        return (1, REAL_EVEN, 1) if even else (2, REAL_ODD, 2)
    f = phi(n)
    if even:
        if condition_F_even(n, p):
            return f // 2, CM_F, f
        return f, CM_Q, f
    # odd exponent: End^0 = K and [K:Q] = 2 d
    if n % 4:
        d = f // 2 if (n % p == 0 and p % 4 == 1) else f
    else:
        d = f // 4 if (p % 4 != 1 and n % (4 * p) == 0 and n % (8 * p) != 0) else f // 2
    return d, CM_F, 2 * d


def dim_of(w):
    d, tag, deg = _dim(w.sign, w.n, w.ctx.p, w.ctx.even)
    return DimData(w, d, tag, deg)


def enumerate_simple(ctx, d, n_max=None):
    """W^ss_q(d) as canonical WeilReps."""
    if n_max is None:
        if d > 4:
            raise ValueError("d > 4 needs an explicit n_max")
        n_max = COMPLETE_BOUND
    return [w for w in enumerate_Wss(ctx, n_max) if dim_of(w).dim == d]


def enumerate_multiple(ctx, d, n_max=None):
    """MW^ss_q(d): all multisets of simple classes with total dimension d."""
    pool = []
    for k in range(1, d + 1):
        pool.extend((w, k) for w in enumerate_simple(ctx, k, n_max))
    pool.sort(key=lambda wk: wk[0].key)
    out = []

    def rec(i, left, acc):
        if left == 0:
            out.append(MultipleWeil(tuple(acc)))
            return
        for j in range(i, len(pool)):
            w, k = pool[j]
            for m in range(1, left // k + 1):
                acc.append((w, m))
                rec(j + 1, left - m * k, acc)
                acc.pop()

    rec(0, d, [])
    out.sort(key=lambda mw: [(w.key, m) for w, m in mw.factors])
    return out
