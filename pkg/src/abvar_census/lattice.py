"""Integer lattices in Hermite normal form."""

from fractions import Fraction
from math import prod

from sympy import Matrix, divisors


def hnf(rows, n):
    """Row-style Hermite normal form: upper triangular, positive pivots, reduced above."""
    work = [list(r) for r in rows if any(r)]
    out = []
    for col in range(n):
        nz = [r for r in work if r[col]]
        rest = [r for r in work if not r[col]]
        while len(nz) > 1:
            nz.sort(key=lambda r: abs(r[col]))
            piv = nz[0]
            keep = [piv]
            for r in nz[1:]:
                f = r[col] // piv[col]
                r = [a - f * b for a, b in zip(r, piv)]
                if r[col]:
                    keep.append(r)
                elif any(r):
                    rest.append(r)
            nz = keep
        if nz:
            piv = nz[0]
            if piv[col] < 0:
                piv = [-a for a in piv]
            out.append((col, piv))
        work = rest
    for i, (c, piv) in enumerate(out):
        for k in range(i):
            r = out[k][1]
            f = r[c] // piv[c]
            if f:
                out[k] = (out[k][0], [a - f * b for a, b in zip(r, piv)])
    return [tuple(r) for _, r in out]


def is_full(H, n):
    return len(H) == n and all(H[i][i] for i in range(n))


def index_of(H):
    """[Z^n : L] for a full-rank HNF basis."""
    return prod(H[i][i] for i in range(len(H)))


def coords_in(H, x):
    """Coordinates of x in the full-rank triangular basis H, or None if x is not in the lattice."""
    x = list(x)
    c = []
    for i, row in enumerate(H):
        q = Fraction(x[i]) / row[i]
        if q.denominator != 1:
            return None
        q = q.numerator
        c.append(q)
        if q:
            for k in range(i, len(x)):
                x[k] -= q * row[k]
    return c


def contains(H, x):
    return coords_in(H, x) is not None


def coset_reps(H):
    """Representatives of Z^n / L for a full-rank triangular L."""
    n = len(H)
    reps = [(0,) * n]
    for i in range(n):
        reps = [tuple(r[k] + (c if k == i else 0) for k in range(n)) for r in reps for c in range(H[i][i])]
    return reps


def elementary_exponent(H):
    """Exponent of the finite group Z^n / L."""
    n = len(H)
    for e in divisors(index_of(H)):
        if all(contains(H, [e if k == i else 0 for k in range(n)]) for i in range(n)):
            return int(e)


def rational_inverse(M):
    """Inverse of a square rational matrix as nested Fraction lists."""
    inv = Matrix([[Fraction(x) for x in row] for row in M]).inv()
    return [[Fraction(int(inv[i, j].p), int(inv[i, j].q)) for j in range(inv.cols)] for i in range(inv.rows)]


def vec_mat(v, M):
    n = len(M[0])
    return tuple(sum((v[i] * M[i][j] for i in range(len(v)) if v[i]), Fraction(0)) for j in range(n))
