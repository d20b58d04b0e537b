"""Orders in etale algebras K = prod K_i of degree <= 4.

Everything below the algebra level works in coordinates over a Z-basis of the
maximal order O_K, where the structure constants are integers and an order is
an HNF sublattice of Z^n containing 1.
"""

from fractions import Fraction
from itertools import product
from math import gcd, prod

import numpy as np

from .arith import as_int
from .cm_quartic import weil_field
from .fields import Cyclotomic5, vec
from .lattice import (coords_in, coset_reps, elementary_exponent, hnf, index_of,
                      rational_inverse, vec_mat)


class EtaleAlgebra:
    """Product of number fields with a block-diagonal Q-basis."""

    def __init__(self, components):
        self.components = list(components)
        self.degree = sum(K.n for K in self.components)
        self.offsets = []
        off = 0
        for K in self.components:
            self.offsets.append(off)
            off += K.n
        n = self.degree
        rows = []
        for K, off in zip(self.components, self.offsets):
            for b in K.int_basis():
                rows.append((Fraction(0),) * off + tuple(b) + (Fraction(0),) * (n - off - K.n))
        self.max_basis = rows
        self.max_inv = rational_inverse(rows)
        S = [[None] * n for _ in range(n)]
        for i in range(n):
            for k in range(n):
                c = self.to_ok(self.mul_q(rows[i], rows[k]))
                S[i][k] = tuple(as_int(x, "structure constant") for x in c)
        self.S = S
        self.one = tuple(as_int(x, "unit coordinate") for x in self.to_ok(self.embed([K.one() for K in self.components])))
        # mult_mats[k] is the matrix of y -> y * b_k on row vectors
        self.mult_mats = np.array([[S[i][k] for i in range(n)] for k in range(n)], dtype=np.int64)

    def __repr__(self):
        return " x ".join(K.name for K in self.components)

    def split_q(self, x):
        return [tuple(x[off:off + K.n]) for K, off in zip(self.components, self.offsets)]

    def embed(self, parts):
        out = ()
        for part in parts:
            out += tuple(part)
        return out

    def mul_q(self, x, y):
        return self.embed([K.mul(a, b) for K, a, b in zip(self.components, self.split_q(x), self.split_q(y))])

    def to_ok(self, x):
        return vec_mat(x, self.max_inv)

    def from_ok(self, c):
        return vec_mat(c, self.max_basis)

    def mul(self, a, b):
        n = self.degree
        out = [0] * n
        for i, x in enumerate(a):
            if not x:
                continue
            for k, y in enumerate(b):
                if not y:
                    continue
                xy = x * y
                for t, s in enumerate(self.S[i][k]):
                    if s:
                        out[t] += xy * s
        return tuple(out)

    def class_number(self):
        return prod(K.class_number() for K in self.components)

    def unit_gens(self):
        """Generators of O_K^x in O_K coordinates (torsion and free parts of every factor)."""
        gens = []
        ones = [K.one() for K in self.components]
        for i, K in enumerate(self.components):
            z, _, free = K.unit_gens()
            for g in [z] + list(free):
                parts = ones[:]
                parts[i] = g
                c = self.to_ok(self.embed(parts))
                gens.append(tuple(as_int(x, "unit coordinate") for x in c))
        return gens


class ZOrder:
    """A full-rank subring of O_K, stored as an HNF basis in O_K coordinates."""

    def __init__(self, algebra, basis):
        self.algebra = algebra
        self.basis = tuple(tuple(r) for r in basis)
        self.index_in_max = index_of(self.basis)

    def __contains__(self, x):
        return coords_in(self.basis, x) is not None

    def __eq__(self, other):
        return isinstance(other, ZOrder) and self.algebra is other.algebra and self.basis == other.basis

    def __hash__(self):
        return hash(self.basis)

    def __repr__(self):
        return f"ZOrder(index={self.index_in_max}, basis={list(self.basis)})"

    def is_ring(self):
        A = self.algebra
        if A.one not in self:
            return False
        return all(A.mul(a, b) in self for a in self.basis for b in self.basis)

    def is_maximal(self):
        return self.index_in_max == 1


def ring_generated(algebra, gens):
    """Smallest order containing the given integral elements (O_K coordinates)."""
    n = algebra.degree
    H = hnf([algebra.one] + [tuple(g) for g in gens], n)
    while True:
        prods = [algebra.mul(a, b) for i, a in enumerate(H) for b in H[i:]]
        H2 = hnf(list(H) + prods, n)
        if H2 == H:
            break
        H = H2
    if len(H) != n:
        raise ValueError("generators do not span a full-rank order")
    return ZOrder(algebra, H)


def maximal_order(algebra):
    n = algebra.degree
    return ZOrder(algebra, [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)])


# --- Weil numbers in their model fields -------------------------------------------------

def weil_element(w):
    """(field, element) realizing the simple class w over F_p inside Q(w)."""
    p, n = w.ctx.p, w.n
    K = weil_field(p, n)
    h = Fraction(1, 2)
    if n == 4:
        x = vec(0, 1)
    elif n == 8 and p == 2:
        x = vec(1, 1)
    elif n == 12 and p == 3:
        x = vec(Fraction(3, 2), h)
    elif n == 3:
        x = vec(0, -h, 0, h * K.g)
    elif n == 8:
        x = vec(0, h, 0, h * K.g)
    elif n == 12:
        x = vec(0, h, 0, h)
    elif n == 24:
        x = vec(h, h, -h, h)
    elif isinstance(K, Cyclotomic5):
        x = K.mul(K.sqrt5(), K.zeta())
    else:
        raise ValueError(f"no model element for {w}")
    return K, (K.neg(x) if w.sign == -1 else x)


def build_Rsp(pi):
    """R_sp = Z[pi_0, pi_0^2/p] inside O_K for a multiple Weil p-number of dimension <= 2."""
    ctx = pi.ctx
    if ctx.a != 1:
        raise ValueError("lattice models are built over the prime field (a = 1)")
    if pi.dim > 2:
        raise ValueError("only dimension <= 2 is supported")
    if any(w.is_real() for w, _ in pi.factors):
        raise ValueError("real factors (sqrt(p)) are handled by closed formulas")
    comps, elems = [], []
    for w, _ in pi.factors:
        K, x = weil_element(w)
        comps.append(K)
        elems.append(x)
    A = EtaleAlgebra(comps)
    p = ctx.p
    pi0 = A.embed(elems)
    pi0sq = A.embed([K.scale(Fraction(1, p), K.mul(x, x)) for K, x in zip(comps, elems)])
    g1 = tuple(as_int(c, "pi_0 coordinate") for c in A.to_ok(pi0))
    g2 = tuple(as_int(c, "pi_0^2/p coordinate") for c in A.to_ok(pi0sq))
    R = ring_generated(A, [g1, g2])
    R.pi0, R.pi0sq_over_p = g1, g2
    return R


# --- suborders, Bass test, class numbers ------------------------------------------------

def suborders_between(R):
    """All orders B with R <= B <= O_K, from R (largest index) to O_K."""
    A = R.algebra
    seen = {R.basis: R}
    queue = [R]
    while queue:
        B = queue.pop()
        for v in coset_reps(B.basis):
            if v in B:
                continue
            C = ring_generated(A, list(B.basis) + [v])
            if C.basis not in seen:
                seen[C.basis] = C
                queue.append(C)
    return sorted(seen.values(), key=lambda B: (-B.index_in_max, B.basis))


def is_bass(R):
    """O_K / R cyclic as an R-module, tested by searching a generator."""
    A = R.algebra
    n = A.degree
    if R.is_maximal():
        return True
    for v in coset_reps(R.basis):
        M = hnf(list(R.basis) + [A.mul(b, v) for b in R.basis], n)
        if index_of(M) == 1:
            return True
    return False


def bass_generator(R):
    A = R.algebra
    n = A.degree
    for v in coset_reps(R.basis):
        if index_of(hnf(list(R.basis) + [A.mul(b, v) for b in R.basis], n)) == 1:
            return v
    return None


def _residues(e, n):
    return np.array(list(product(range(e), repeat=n)), dtype=np.int64)


def _membership_mod(B, res):
    """Rows of res (integer vectors) that lie in B, for residues modulo a multiple of B's exponent."""
    n = len(B.basis)
    inv = rational_inverse(B.basis)
    d = B.index_in_max
    adj = np.array([[as_int(x * d) for x in row] for row in inv], dtype=np.int64)
    return np.all((res @ adj) % d == 0, axis=1)


def unit_image(A, e):
    """The image of O_K^x in (O_K / e O_K)^x, as a set of residue tuples."""
    gens = [tuple(c % e for c in g) for g in A.unit_gens()]
    one = tuple(c % e for c in A.one)
    seen = {one}
    frontier = [one]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = tuple(c % e for c in A.mul(x, g))
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def class_number_order(B):
    """h(B) = h(O_K) [(O_K/a)^x : (B/a)^x] / [O_K^x : B^x] with a = e O_K, e the exponent of O_K/B."""
    A = B.algebra
    hK = A.class_number()
    e = elementary_exponent(B.basis)
    if e == 1:
        return hK
    n = A.degree
    res = _residues(e, n)
    mats = np.einsum("rk,kij->rij", res, A.mult_mats)
    dets = np.rint(np.linalg.det(mats.astype(float))).astype(np.int64)
    units = np.gcd(dets, e) == 1
    inB = _membership_mod(B, res)
    n_units = int(units.sum())
    n_units_B = int((units & inB).sum())
    img = unit_image(A, e)
    img_arr = np.array(sorted(img), dtype=np.int64)
    n_img_B = int(_membership_mod(B, img_arr).sum())
    unit_index = Fraction(len(img), n_img_B)
    h = Fraction(hK * n_units, n_units_B) / unit_index
    return as_int(h, "h(B)")


def local_unit_surjective(B):
    """Whether O_K^x maps onto (O_K / e O_K)^x for e the exponent of O_K/B."""
    A = B.algebra
    e = elementary_exponent(B.basis)
    if e == 1:
        return True
    res = _residues(e, A.degree)
    mats = np.einsum("rk,kij->rij", res, A.mult_mats)
    dets = np.rint(np.linalg.det(mats.astype(float))).astype(np.int64)
    return len(unit_image(A, e)) == int((np.gcd(dets, e) == 1).sum())


def Hsp_from_orders(pi):
    """Sum of h(B) over R_sp <= B <= O_K."""
    R = build_Rsp(pi)
    return sum(class_number_order(B) for B in suborders_between(R))
