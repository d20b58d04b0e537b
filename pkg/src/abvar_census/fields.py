"""Concrete number fields of degree <= 4 with explicit multiplication tables.

Elements are tuples of Fractions over a fixed Q-basis of each field.
"""

from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import product
from math import gcd

from .arith import is_squarefree, rational_sqrt
from .lattice import hnf
from .quadratics import class_number_quadratic, field_disc, fundamental_unit, roots_of_unity

F0, F1 = Fraction(0), Fraction(1)


def vec(*xs):
    return tuple(Fraction(x) for x in xs)


class Field:
    name = "field"
    n = 0
    table = ()

    def one(self):
        return (F1,) + (F0,) * (self.n - 1)

    def zero(self):
        return (F0,) * self.n

    def add(self, x, y):
        return tuple(a + b for a, b in zip(x, y))

    def sub(self, x, y):
        return tuple(a - b for a, b in zip(x, y))

    def neg(self, x):
        return tuple(-a for a in x)

    def scale(self, c, x):
        return tuple(c * a for a in x)

    def mul(self, x, y):
        out = [F0] * self.n
        for i, a in enumerate(x):
            if not a:
                continue
            row = self.table[i]
            for j, b in enumerate(y):
                if not b:
                    continue
                ab = a * b
                for k, c in enumerate(row[j]):
                    if c:
                        out[k] += ab * c
        return tuple(out)

    def power(self, x, k):
        r = self.one()
        for _ in range(k):
            r = self.mul(r, x)
        return r

    def mult_matrix(self, x):
        """Rows are e_i * x, so that y -> y*x acts on row vectors."""
        basis = [tuple(F1 if k == i else F0 for k in range(self.n)) for i in range(self.n)]
        return [self.mul(e, x) for e in basis]

    def charpoly(self, x):
        """Characteristic polynomial of multiplication by x, monic, highest degree first."""
        M = self.mult_matrix(x)
        n = self.n
        # Faddeev-LeVerrier
        coeffs = [F1]
        Mk = [[F0] * n for _ in range(n)]
        c = F1
        for k in range(1, n + 1):
            Mk = [[sum(M[i][l] * Mk[l][jj] for l in range(n)) + (c if i == jj else F0)
                   for jj in range(n)] for i in range(n)]
            AM = [[sum(M[i][l] * Mk[l][jj] for l in range(n)) for jj in range(n)] for i in range(n)]
            c = -sum(AM[i][i] for i in range(n)) / k
            coeffs.append(c)
        return coeffs

    def is_integral(self, x):
        return all(c.denominator == 1 for c in self.charpoly(x))

    def order_of_root(self, z, bound=60):
        """Multiplicative order of a root of unity, or None."""
        r = z
        for k in range(1, bound + 1):
            if r == self.one():
                return k
            r = self.mul(r, z)
        return None


def sqrt_in_quadratic(a, b, m):
    """A square root s + t sqrt(m) of a + b sqrt(m) in Q(sqrt m), or None."""
    a, b = Fraction(a), Fraction(b)
    if b == 0:
        r = rational_sqrt(a)
        if r is not None:
            return (r, F0)
        r = rational_sqrt(a / m)
        if r is not None:
            return (F0, r)
        return None
    nrm = rational_sqrt(a * a - m * b * b)
    if nrm is None:
        return None
    for s2 in ((a + nrm) / 2, (a - nrm) / 2):
        s = rational_sqrt(s2)
        if s:
            return (s, b / (2 * s))
    return None


def _qmul(x, y, m):
    return (x[0] * y[0] + m * x[1] * y[1], x[0] * y[1] + x[1] * y[0])


def _qinv(x, m):
    nrm = x[0] * x[0] - m * x[1] * x[1]
    return (x[0] / nrm, -x[1] / nrm)


class QuadraticField(Field):
    """Q(sqrt d) on the basis (1, sqrt d)."""

    def __init__(self, d):
        if d in (0, 1) or not is_squarefree(d):
            raise ValueError(f"d={d} must be squarefree and not 0, 1")
        self.d = d
        self.n = 2
        self.name = f"Q(sqrt({d}))"
        self.table = ((vec(1, 0), vec(0, 1)), (vec(0, 1), vec(d, 0)))

    @property
    def disc(self):
        return field_disc(self.d)

    def int_basis(self):
        if self.d % 4 == 1:
            return [vec(1, 0), vec(Fraction(1, 2), Fraction(1, 2))]
        return [vec(1, 0), vec(0, 1)]

    def class_number(self):
        return class_number_quadratic(self.d)

    def conj(self, x):
        return (x[0], -x[1])

    def sqrt(self, x):
        return sqrt_in_quadratic(x[0], x[1], self.d)

    def unit_gens(self):
        if self.d > 0:
            a, b = fundamental_unit(self.d).coords
            return vec(-1, 0), 2, [vec(a, b)]
        w = roots_of_unity(self.d)
        z = {4: vec(0, 1), 6: vec(Fraction(1, 2), Fraction(1, 2))}.get(w, vec(-1, 0))
        return z, w, []


class BiquadField(Field):
    """K_{m,j} = Q(sqrt m, sqrt(-j)) on the basis (1, sqrt m, sqrt(-j), sqrt(-j'))

    with g = gcd(m, j), j' = m j / g^2 and sqrt(-j') = sqrt(m) sqrt(-j) / g.
    """

    def __init__(self, m, j):
        if m <= 1 or j < 1 or not is_squarefree(m) or not is_squarefree(j):
            raise ValueError(f"K_({m},{j}) needs squarefree m > 1 and j >= 1")
        self.m, self.j = m, j
        self.g = g = gcd(m, j)
        self.jp = jp = m * j // (g * g)
        self.n = 4
        self.name = f"Q(sqrt({m}),sqrt(-{j}))"
        e = [vec(*[1 if k == i else 0 for k in range(4)]) for i in range(4)]
        z = vec(0, 0, 0, 0)
        t = [[None] * 4 for _ in range(4)]
        t[0] = e[:]
        for i in range(4):
            t[i][0] = e[i]
        t[1][1] = vec(m, 0, 0, 0)
        t[2][2] = vec(-j, 0, 0, 0)
        t[3][3] = vec(-jp, 0, 0, 0)
        t[1][2] = t[2][1] = vec(0, 0, 0, g)
        t[1][3] = t[3][1] = vec(0, 0, Fraction(m, g), 0)
        t[2][3] = t[3][2] = vec(0, -Fraction(j, g), 0, 0)
        assert z not in [t[i][k] for i in range(4) for k in range(4)]
        self.table = tuple(tuple(r) for r in t)
        self._int_basis = None

    def subfield_params(self):
        """Squarefree parameters of the three quadratic subfields: real, then two imaginary."""
        return (self.m, -self.j, -self.jp)

    @property
    def sub_discs(self):
        return tuple(field_disc(d) for d in self.subfield_params())

    @property
    def disc(self):
        a, b, c = self.sub_discs
        return a * b * c

    def conj(self, x):
        return (x[0], x[1], -x[2], -x[3])

    # relative coordinates over k0 = Q(sqrt m): x = y0 + y1 sqrt(-j)
    def split(self, x):
        return (x[0], x[1]), (x[2], x[3] / self.g)

    def join(self, y0, y1):
        return (y0[0], y0[1], y1[0], y1[1] * self.g)

    def _in_ok0(self, y):
        # a + b sqrt m integral iff trace and norm are integers
        tr = 2 * y[0]
        nm = y[0] * y[0] - self.m * y[1] * y[1]
        return tr.denominator == 1 and nm.denominator == 1

    def is_integral(self, x):
        y0, y1 = self.split(x)
        tr = (2 * y0[0], 2 * y0[1])
        y0sq = _qmul(y0, y0, self.m)
        y1sq = _qmul(y1, y1, self.m)
        nm = (y0sq[0] + self.j * y1sq[0], y0sq[1] + self.j * y1sq[1])
        return self._in_ok0(tr) and self._in_ok0(nm)

    def int_basis(self):
        if self._int_basis is None:
            self._int_basis = self._compute_int_basis()
        return self._int_basis

    def _compute_int_basis(self):
        # O_K sits inside (1/4) of the lattice spanned by the basis
        gens = [[4 if k == i else 0 for k in range(4)] for i in range(4)]
        for c in product(range(4), repeat=4):
            if any(c) and self.is_integral(tuple(Fraction(x, 4) for x in c)):
                gens.append(list(c))
        H = hnf(gens, 4)
        return [tuple(Fraction(x, 4) for x in row) for row in H]

    def sqrt(self, x):
        """An exact square root of x in K, or None."""
        m, j = self.m, self.j
        y0, y1 = self.split(x)
        if y1 == (F0, F0):
            r = sqrt_in_quadratic(*y0, m)
            if r is not None:
                return self.join(r, (F0, F0))
            r = sqrt_in_quadratic(-y0[0] / j, -y0[1] / j, m)
            if r is not None:
                return self.join((F0, F0), r)
            return None
        y0sq = _qmul(y0, y0, m)
        y1sq = _qmul(y1, y1, m)
        disc = sqrt_in_quadratic(y0sq[0] + j * y1sq[0], y0sq[1] + j * y1sq[1], m)
        if disc is None:
            return None
        for sgn in (1, -1):
            v0sq = ((y0[0] + sgn * disc[0]) / 2, (y0[1] + sgn * disc[1]) / 2)
            v0 = sqrt_in_quadratic(*v0sq, m)
            if v0 is None or v0 == (F0, F0):
                continue
            inv = _qinv((2 * v0[0], 2 * v0[1]), m)
            v1 = _qmul(y1, inv, m)
            cand = self.join(v0, v1)
            if self.mul(cand, cand) == tuple(x):
                return cand
        return None

    def roots_of_unity(self):
        """(generator, w) of the torsion units of K."""
        return self._roots

    @cached_property
    def _roots(self):
        one = self.one()
        i = self.sqrt(vec(-1, 0, 0, 0))
        r3 = self.sqrt(vec(-3, 0, 0, 0))
        z6 = None if r3 is None else self.scale(Fraction(1, 2), self.add(one, r3))
        if i is not None and z6 is not None:
            gen, w = self.mul(i, z6), 12
        elif i is not None:
            z8 = self.sqrt(i)
            gen, w = (z8, 8) if z8 is not None else (i, 4)
        elif z6 is not None:
            gen, w = z6, 6
        else:
            gen, w = self.neg(one), 2
        if self.order_of_root(gen) != w:
            raise AssertionError(f"root of unity of wrong order in {self.name}")
        return gen, w

    def hasse_data(self):
        """(Q, eta) with eta a generator of the units modulo roots of unity."""
        return self._hasse

    @cached_property
    def _hasse(self):
        a, b = fundamental_unit(self.m).coords
        eps = vec(a, b, 0, 0)
        z, w = self.roots_of_unity()
        zk = self.one()
        for _ in range(w):
            r = self.sqrt(self.mul(zk, eps))
            if r is not None:
                return 2, r
            zk = self.mul(zk, z)
        return 1, eps

    def unit_gens(self):
        z, w = self.roots_of_unity()
        return z, w, [self.hasse_data()[1]]

    def class_number(self):
        from .cm_quartic import class_number_cm
        return class_number_cm(self.m, self.j)


class Cyclotomic5(Field):
    """Q(zeta_5) on the basis (1, z, z^2, z^3) with z^4 = -1 - z - z^2 - z^3."""

    def __init__(self):
        self.n = 4
        self.name = "Q(zeta_5)"
        powers = []
        for k in range(7):
            if k < 4:
                powers.append(vec(*[1 if i == k else 0 for i in range(4)]))
            elif k == 4:
                powers.append(vec(-1, -1, -1, -1))
            else:
                prev = powers[k - 1]
                # multiply by z
                shifted = (F0,) + prev[:3]
                powers.append(tuple(s + prev[3] * c for s, c in zip(shifted, powers[4])))
        self.powers = powers
        self.table = tuple(tuple(powers[i + k] for k in range(4)) for i in range(4))

    @property
    def disc(self):
        return 125

    def zeta(self):
        return self.powers[1]

    def sqrt5(self):
        # Gauss sum z - z^2 - z^3 + z^4
        P = self.powers
        return self.sub(self.add(P[1], P[4]), self.add(P[2], P[3]))

    def int_basis(self):
        return [self.powers[k] for k in range(4)]

    def class_number(self):
        return 1

    def conj(self, x):
        out = self.zero()
        for k, c in enumerate(x):
            out = self.add(out, self.scale(c, self.powers[(5 - k) % 5]))
        return out

    def unit_gens(self):
        P = self.powers
        golden = self.add(self.add(P[0], P[1]), P[4])
        return self.neg(P[1]), 10, [golden]


@lru_cache(maxsize=None)
def quadratic_field(d):
    return QuadraticField(d)


@lru_cache(maxsize=None)
def biquad_field(m, j):
    return BiquadField(m, j)


@lru_cache(maxsize=None)
def cyclotomic5():
    return Cyclotomic5()
