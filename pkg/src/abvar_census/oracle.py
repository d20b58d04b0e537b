"""Brute-force ground truth: elliptic-curve censuses over small F_q and
exact Galois-orbit tests in cyclotomic fields."""

from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt

import numpy as np
from sympy import GF as _SymGF, Poly, cyclotomic_poly, symbols

from .arith import factor, is_prime, kronecker, lcm, phi
from .quadratics import BQF
from .weil import PrimePower, delta_q

MAX_Q = 512
MAX_Q_SMALL_CHAR = 32


# --- finite fields ----------------------------------------------------------------------

class FiniteField:
    """F_q with elements 0..q-1 (base-p digits of a polynomial) and lookup tables."""

    def __init__(self, p, a):
        self.p, self.a, self.q = p, a, p ** a
        q = self.q
        self.modulus = _irreducible(p, a)
        digits = np.array([[(x // p ** i) % p for i in range(a)] for x in range(q)], dtype=np.int64)
        weights = p ** np.arange(a, dtype=np.int64)
        self.add = ((digits[:, None, :] + digits[None, :, :]) % p) @ weights
        self.neg = ((-digits) % p) @ weights
        self.sub = self.add[:, self.neg]
        g, powers = self._primitive(digits)
        self.exp = np.array(powers, dtype=np.int64)
        self.log = np.zeros(q, dtype=np.int64)
        self.log[self.exp] = np.arange(q - 1)
        L = (self.log[:, None] + self.log[None, :]) % (q - 1)
        mul = self.exp[L]
        mul[0, :] = 0
        mul[:, 0] = 0
        self.mul = mul
        self.inv = np.zeros(q, dtype=np.int64)
        self.inv[1:] = self.exp[(-self.log[1:]) % (q - 1)]

    def _mulvec(self, u, v):
        p, a = self.p, self.a
        prod = [0] * (2 * a - 1)
        for i, x in enumerate(u):
            if x:
                for j, y in enumerate(v):
                    prod[i + j] = (prod[i + j] + x * y) % p
        f = self.modulus  # monic, low degree first, length a + 1
        for k in range(2 * a - 2, a - 1, -1):
            c = prod[k]
            if c:
                for i in range(a + 1):
                    prod[k - a + i] = (prod[k - a + i] - c * f[i]) % p
        return prod[:a]

    def _primitive(self, digits):
        p, a, q = self.p, self.a, self.q
        weights = [p ** i for i in range(a)]
        for g in range(2, q) if q > 2 else [1]:
            gv = list(digits[g])
            cur = [1] + [0] * (a - 1)
            powers = []
            seen_one = False
            for k in range(q - 1):
                idx = sum(c * w for c, w in zip(cur, weights))
                if k > 0 and idx == 1:
                    seen_one = True
                    break
                powers.append(idx)
                cur = self._mulvec(cur, gv)
            if not seen_one and len(powers) == q - 1:
                return g, powers
        raise AssertionError("no primitive element found")

    def const(self, k):
        return k % self.p


def _irreducible(p, a):
    """Low-to-high coefficients of the first monic irreducible polynomial of degree a."""
    if a == 1:
        return [0, 1]
    x = symbols("x")
    for code in range(p ** a):
        low = [(code // p ** i) % p for i in range(a)]
        if low[0] == 0:
            continue
        coeffs = list(reversed(low + [1]))
        if Poly(coeffs, x, modulus=p).is_irreducible:
            return low + [1]
    raise AssertionError("no irreducible polynomial")


@lru_cache(maxsize=None)
def finite_field(q):
    fac = factor(q)
    if len(fac) != 1:
        raise ValueError(f"q={q} is not a prime power")
    (p, a), = fac.items()
    return FiniteField(p, a)


# --- elliptic curves --------------------------------------------------------------------

@dataclass(frozen=True)
class CurveClass:
    q: int
    coeffs: tuple  # (a1, a2, a3, a4, a6) as field-element indices
    j_invariant: int
    trace: int
    twist_tag: int  # position of this class among the classes sharing its j

    @property
    def supersingular(self):
        p = finite_field(self.q).p
        return self.trace % p == 0


def _check_q(q):
    fac = factor(q)
    if len(fac) != 1:
        raise ValueError(f"q={q} is not a prime power")
    p = next(iter(fac))
    if q > MAX_Q:
        raise ValueError(f"q={q} exceeds the brute-force limit {MAX_Q}")
    if p in (2, 3) and q > MAX_Q_SMALL_CHAR:
        raise ValueError(f"q={q}: characteristic 2 and 3 are enumerated only up to q={MAX_Q_SMALL_CHAR}")
    return p


def _classes_short(F):
    """Isomorphism classes of y^2 = x^3 + A x + B over F_q, p >= 5."""
    q, p = F.q, F.p
    mul, add = F.mul, F.add
    xs = np.arange(q)
    x3 = mul[mul[xs, xs], xs]
    sq = np.bincount(mul[xs, xs], minlength=q)
    units = np.arange(1, q)
    u2 = mul[units, units]
    u4 = mul[u2, u2]
    u6 = mul[u4, u2]
    c4, c27 = F.const(4), F.const(27)
    c1728 = F.const(1728)
    visited = np.zeros((q, q), dtype=bool)
    out = []
    for A in range(q):
        A3 = mul[mul[A, A], A]
        for B in range(q):
            if visited[A, B]:
                continue
            disc = add[mul[c4, A3], mul[c27, mul[B, B]]]
            visited[mul[u4, A], mul[u6, B]] = True
            if disc == 0:
                continue
            f = add[add[x3, mul[A, xs]], B]
            npts = 1 + int(sq[f].sum())
            j = int(mul[mul[c1728, mul[c4, A3]], F.inv[disc]])
            out.append(((0, 0, 0, A, B), j, q + 1 - npts))
    return out


def _classes_general(F):
    """Isomorphism classes of long Weierstrass curves, any characteristic, small q."""
    q, p = F.q, F.p
    mul, add, sub, neg, inv = F.mul, F.add, F.sub, F.neg, F.inv
    c = F.const
    U, R, S, T = np.meshgrid(np.arange(1, q), np.arange(q), np.arange(q), np.arange(q), indexing="ij")
    U, R, S, T = (g.ravel() for g in (U, R, S, T))
    ui = inv[U]
    ui2 = mul[ui, ui]
    ui3 = mul[ui2, ui]
    ui4 = mul[ui2, ui2]
    ui6 = mul[ui4, ui2]
    two, three = c(2), c(3)
    s2 = mul[two, S]
    RS = mul[R, S]
    xs, ys = np.meshgrid(np.arange(q), np.arange(q), indexing="ij")
    xs, ys = xs.ravel(), ys.ravel()

    def disc_and_j(a1, a2, a3, a4, a6):
        b2 = add[mul[a1, a1], mul[c(4), a2]]
        b4 = add[mul[two, a4], mul[a1, a3]]
        b6 = add[mul[a3, a3], mul[c(4), a6]]
        b8 = sub[add[add[mul[mul[a1, a1], a6], mul[c(4), mul[a2, a6]]], mul[a2, mul[a3, a3]]],
                 add[mul[a1, mul[a3, a4]], mul[a4, a4]]]
        c4 = sub[mul[b2, b2], mul[c(24), b4]]
        d = add[sub[neg[mul[mul[b2, b2], b8]], add[mul[c(8), mul[mul[b4, b4], b4]], mul[c(27), mul[b6, b6]]]],
                mul[c(9), mul[mul[b2, b4], b6]]]
        j = mul[mul[mul[c4, c4], c4], inv[d]] if d else 0
        return d, j

    visited = np.zeros((q,) * 5, dtype=bool)
    flat = visited.reshape(-1)
    out = []
    idx = 0
    while True:
        rest = np.flatnonzero(~flat[idx:idx + q ** 3])
        if rest.size == 0:
            idx += q ** 3
            if idx >= flat.size:
                break
            continue
        idx += int(rest[0])
        a1, a2, a3, a4, a6 = (int(v) for v in np.unravel_index(idx, (q,) * 5))
        n1 = mul[ui, add[a1, s2]]
        n2 = mul[ui2, add[sub[sub[a2, mul[S, a1]], mul[S, S]], mul[three, R]]]
        n3 = mul[ui3, add[add[a3, mul[R, a1]], mul[two, T]]]
        n4 = mul[ui4, sub[add[sub[a4, mul[S, a3]], add[mul[two, mul[R, a2]], mul[three, mul[R, R]]]],
                          add[mul[add[T, RS], a1], mul[two, mul[S, T]]]]]
        R2 = mul[R, R]
        n6 = mul[ui6, sub[add[add[a6, mul[R, a4]], add[mul[R2, a2], mul[R2, R]]],
                          add[add[mul[T, a3], mul[T, T]], mul[mul[R, T], a1]]]]
        visited[n1, n2, n3, n4, n6] = True
        d, j = disc_and_j(a1, a2, a3, a4, a6)
        if d == 0:
            continue
        lhs = add[add[mul[ys, ys], mul[mul[a1, xs], ys]], mul[a3, ys]]
        rhs = add[add[add[mul[mul[xs, xs], xs], mul[a2, mul[xs, xs]]], mul[a4, xs]], a6]
        npts = 1 + int((lhs == rhs).sum())
        out.append(((a1, a2, a3, a4, a6), int(j), q + 1 - npts))
    return out


@lru_cache(maxsize=None)
def curve_classes(q):
    """All F_q-isomorphism classes of elliptic curves, with j-invariant and trace."""
    p = _check_q(q)
    F = finite_field(q)
    raw = _classes_general(F) if p in (2, 3) else _classes_short(F)
    raw.sort(key=lambda r: (r[1], r[2], r[0]))
    out, count = [], {}
    for coeffs, j, t in raw:
        if t * t > 4 * q:
            raise AssertionError(f"Hasse bound violated over F_{q}: t={t}")
        k = count.get(j, 0)
        count[j] = k + 1
        out.append(CurveClass(q, coeffs, j, t, k))
    return tuple(out)


def supersingular_classes(q):
    return [c for c in curve_classes(q) if c.supersingular]


def brute_curve_census(q):
    """Number of F_q-isomorphism classes of supersingular elliptic curves."""
    return len(supersingular_classes(q))


def twist_counts_consistent(q):
    """For p >= 5: every supersingular j has 2 classes, gcd(6, q-1) for j = 0, gcd(4, q-1) for j = 1728."""
    F = finite_field(q)
    if F.p < 5:
        raise ValueError("twist rule is stated for p >= 5")
    j1728 = F.const(1728)
    per_j = {}
    for c in supersingular_classes(q):
        per_j[c.j_invariant] = per_j.get(c.j_invariant, 0) + 1
    for j, k in per_j.items():
        want = gcd(6, q - 1) if j == 0 else gcd(4, q - 1) if j == j1728 else 2
        if k != want:
            return False
    return True


# --- binary quadratic forms -------------------------------------------------------------

def _reduce_definite(A, B, C):
    while True:
        if not -A < B <= A:
            k = (A - B) // (2 * A)
            B2 = B + 2 * k * A
            C = (B2 * B2 - (B * B - 4 * A * C)) // (4 * A)
            B = B2
        if A > C:
            A, B, C = C, -B, A
            continue
        if A == C and B < 0:
            B = -B
        return A, B, C


def reduced_forms_oracle(disc):
    """Reduced forms of discriminant disc < 0, found by reducing every form in a wide box."""
    if disc >= 0:
        raise ValueError("disc must be negative")
    D = -disc
    found = set()
    top = isqrt(D) + 1
    for A in range(1, top + 1):
        for B in range(-A, A + 1):
            num = B * B + D
            if num % (4 * A):
                continue
            C = num // (4 * A)
            if gcd(gcd(A, B), C) != 1:
                continue
            found.add(_reduce_definite(A, B, C))
    return [BQF(*f) for f in sorted(found)]


# --- cyclotomic fields ------------------------------------------------------------------

class CycloField:
    """Q(zeta_N); elements are integer vectors over zeta_N^0 .. zeta_N^(phi(N)-1)."""

    def __init__(self, N):
        self.N = N
        self.deg = d = phi(N)
        poly = [int(c) for c in reversed(cyclotomic_poly(N, polys=True).all_coeffs())]
        red = np.zeros((N, d), dtype=np.int64)
        cur = np.zeros(d, dtype=np.int64)
        cur[0] = 1
        for k in range(N):
            red[k] = cur
            top = cur[-1]
            cur = np.concatenate(([0], cur[:-1]))
            if top:
                cur = cur - top * np.array(poly[:d], dtype=np.int64)
        self.red = red

    def reduce(self, raw):
        """raw: dict exponent -> coefficient."""
        v = np.zeros(self.deg, dtype=np.int64)
        for k, c in raw.items():
            v += c * self.red[k % self.N]
        return v

    def mul_raw(self, x, y):
        out = {}
        for a, c in x.items():
            for b, e in y.items():
                k = (a + b) % self.N
                out[k] = out.get(k, 0) + c * e
        return out

    def units(self):
        return [r for r in range(1, self.N + 1) if gcd(r, self.N) == 1]

    def galois_images(self, raw):
        """Reduced vectors of sigma_r(x) for every r in (Z/N)^x, stacked in unit order."""
        exps = np.array(list(raw.keys()), dtype=np.int64)
        coeffs = np.array(list(raw.values()), dtype=np.int64)
        rs = np.array(self.units(), dtype=np.int64)
        out = []
        for chunk in np.array_split(rs, max(1, len(rs) // 64)):
            idx = (chunk[:, None] * exps[None, :]) % self.N
            out.append(np.einsum("rsd,s->rd", self.red[idx], coeffs))
        return rs, np.concatenate(out)

    def are_conjugate(self, x, y):
        """Some sigma_r maps x to y (both given as raw dicts)."""
        target = self.reduce(y)
        _, imgs = self.galois_images(x)
        return bool(np.any(np.all(imgs == target, axis=1)))


@lru_cache(maxsize=None)
def cyclo_field(N):
    return CycloField(N)


def sqrt_p_raw(p, N):
    """sqrt(p) inside Q(zeta_N) as a raw dict, via a Gauss sum; needs delta_p | N."""
    dp = delta_q(PrimePower(p, 1))
    if N % dp:
        raise ValueError(f"sqrt({p}) is not in Q(zeta_{N})")
    if p == 2:
        return {N // 8: 1, (-N // 8) % N: 1}
    step = N // p
    g = {(k * step) % N: kronecker(k, p) for k in range(1, p)}
    if p % 4 == 1:
        return g
    # g = i sqrt(p), so sqrt(p) = -i g
    quarter = N // 4
    return {(k + quarter) % N: -c for k, c in g.items()}


def check_sqrt_p(p, N=None):
    N = N or delta_q(PrimePower(p, 1))
    K = cyclo_field(N)
    s = sqrt_p_raw(p, N)
    sq = K.reduce(K.mul_raw(s, s))
    want = np.zeros(K.deg, dtype=np.int64)
    want[0] = p
    return bool(np.all(sq == want))


def weil_raw(sign, n, p, odd, N):
    """sign * sqrt(p)^[odd] * zeta_n as a raw dict in Q(zeta_N)."""
    shift = N // n
    if odd:
        base = sqrt_p_raw(p, N)
        return {(k + shift) % N: sign * c for k, c in base.items()}
    return {shift % N: sign}


def galois_conjugate_test(n, p, a_parity):
    """Exact test of sqrt(q) zeta_n ~ -sqrt(q) zeta_n. a_parity is 'odd' or 'even'."""
    if n % 4 == 2:
        raise ValueError("n must not be 2 mod 4")
    odd = a_parity == "odd"
    N = lcm(n, delta_q(PrimePower(p, 1 if odd else 2)))
    K = cyclo_field(N)
    x = weil_raw(1, n, p, odd, N)
    y = {k: -c for k, c in x.items()}
    return K.are_conjugate(x, y)


def weil_classes_conjugate(s1, n1, s2, n2, p, a_parity):
    """Whether s1 sqrt(q) zeta_n1 and s2 sqrt(q) zeta_n2 are Galois conjugate."""
    odd = a_parity == "odd"
    N = lcm(lcm(n1, n2), delta_q(PrimePower(p, 1 if odd else 2)))
    K = cyclo_field(N)
    return K.are_conjugate(weil_raw(s1, n1, p, odd, N), weil_raw(s2, n2, p, odd, N))


def weil_degree(n, p, a_parity):
    """[Q(sqrt(q) zeta_n) : Q], read off as the size of the Galois orbit."""
    odd = a_parity == "odd"
    N = lcm(n, delta_q(PrimePower(p, 1 if odd else 2)))
    K = cyclo_field(N)
    _, imgs = K.galois_images(weil_raw(1, n, p, odd, N))
    return len({row.tobytes() for row in imgs})
