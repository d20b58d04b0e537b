"""Supersingular Weil q-numbers +-sqrt(q)*zeta_n in canonical form."""

from dataclasses import dataclass

from .arith import is_prime, kronecker


@dataclass(frozen=True)
class PrimePower:
    p: int
    a: int = 1

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"p={self.p} is not prime")
        if self.a < 1:
            raise ValueError(f"exponent a={self.a} must be >= 1")

    @property
    def q(self):
        return self.p ** self.a

    @property
    def even(self):
        return self.a % 2 == 0

    def __str__(self):
        return f"{self.p}^{self.a}"


def delta_q(ctx):
    """Smallest conductor N with sqrt(q) in Q(zeta_N)."""
    if ctx.even:
        return 1
    if ctx.p % 4 == 1:
        return ctx.p
    return 4 * ctx.p


def is_critical(n, ctx):
    if n < 1:
        raise ValueError("n must be >= 1")
    d = delta_q(ctx)
    return n % d == 0 and n % (2 * d) != 0


def _check_normal(n):
    if n < 1 or n % 4 == 2:
        raise ValueError(f"n={n} is not in normal form (n >= 1, n != 2 mod 4)")


def are_conjugate_pm(n, ctx):
    """Whether sqrt(q)*zeta_n and -sqrt(q)*zeta_n are Galois conjugate."""
    _check_normal(n)
    return not is_critical(n, ctx)


def are_conjugate_pm_casewise(n, ctx):
    """The same predicate spelled out case by case, kept as a cross-check."""
    _check_normal(n)
    p = ctx.p
    if ctx.even:
        return n % 4 == 0
    if p == 2:
        return n % 8 != 0 or n % 16 == 0
    if p % 4 == 1:
        return n % p != 0 or n % (4 * p) == 0
    return n % (4 * p) != 0 or n % (8 * p) == 0


@dataclass(frozen=True, order=False)
class WeilRep:
    sign: int
    n: int
    ctx: PrimePower

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        _check_normal(self.n)
        if self.sign == -1 and are_conjugate_pm(self.n, self.ctx):
            raise ValueError(f"-sqrt(q)*zeta_{self.n} is conjugate to its positive twin")

    @property
    def key(self):
        return (self.n, 0 if self.sign == 1 else 1)

    def is_real(self):
        return self.n == 1

    def __str__(self):
        s = "+" if self.sign == 1 else "-"
        return f"{s}sqrt(q)*zeta_{self.n}"


def canonicalize(sign, n, ctx):
    """Canonical representative of the class of sign*sqrt(q)*zeta_n."""
    if sign not in (1, -1) or n < 1:
        raise ValueError("need sign in {+1,-1} and n >= 1")
    if n % 4 == 2:
        # zeta_{2k} = -zeta_k^u with u = (k+1)/2; sigma_2 carries zeta_k^u back to zeta_k
        k = n // 2
        sign = -sign
        if not ctx.even and ctx.p % 4 == 1 and k % ctx.p == 0:
            sign *= kronecker(2, ctx.p)
        n = k
    if sign == -1 and are_conjugate_pm(n, ctx):
        sign = 1
    return WeilRep(sign, n, ctx)


def enumerate_Wss(ctx, n_max):
    """All canonical classes with n <= n_max, sorted by (n, sign)."""
    out = []
    for n in range(1, n_max + 1):
        if n % 4 == 2:
            continue
        out.append(WeilRep(1, n, ctx))
        if is_critical(n, ctx):
            out.append(WeilRep(-1, n, ctx))
    return out


@dataclass(frozen=True)
class MultipleWeil:
    factors: tuple

    def __post_init__(self):
        fs = tuple((w, int(m)) for w, m in self.factors)
        if not fs:
            raise ValueError("empty product")
        ctxs = {w.ctx for w, _ in fs}
        if len(ctxs) != 1:
            raise ValueError("factors must share one prime power")
        if any(m < 1 for _, m in fs):
            raise ValueError("multiplicities must be >= 1")
        keys = [w.key for w, _ in fs]
        if len(set(keys)) != len(keys):
            raise ValueError("factors must be pairwise non-conjugate")
        if keys != sorted(keys):
            raise ValueError("factors must be sorted by (n, sign)")
        object.__setattr__(self, "factors", fs)

    @classmethod
    def of(cls, parts):
        """Build from (sign, n, ctx, m) or (WeilRep, m) items, canonicalizing and merging."""
        acc = {}
        for item in parts:
            if len(item) == 2:
                w, m = item
            else:
                s, n, ctx, m = item
                w = canonicalize(s, n, ctx)
            acc[w] = acc.get(w, 0) + m
        return cls(tuple(sorted(acc.items(), key=lambda wm: wm[0].key)))

    @property
    def ctx(self):
        return self.factors[0][0].ctx

    @property
    def is_simple(self):
        return len(self.factors) == 1 and self.factors[0][1] == 1

    @property
    def dim(self):
        from .dimension import dim_of
        return sum(m * dim_of(w).dim for w, m in self.factors)

    def __str__(self):
        parts = []
        for w, m in self.factors:
            parts.append(str(w) if m == 1 else f"({w})^{m}")
        return " x ".join(parts)
