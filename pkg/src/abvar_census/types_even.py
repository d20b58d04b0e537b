"""d-admissible types (n_bar, m_bar) for even exponent and their multiple Weil numbers.

Over q = p^a with a even every supersingular class is (-p)^(a/2) * zeta_n for a
unique n >= 1, so types index by plain integers n, including n = 2 mod 4.
"""

from dataclasses import dataclass

from .dimension import dim_of
from .weil import MultipleWeil, WeilRep, canonicalize

N_BOUND = 120


def _need_even(ctx):
    if not ctx.even:
        raise ValueError("admissible types are defined for even exponent only")


def d_of_n_even(n, ctx):
    _need_even(ctx)
    if n < 1:
        raise ValueError("n must be >= 1")
    if n <= 2:
        return 1
    if n % 4 == 2:
        return d_of_n_even(n // 2, ctx)
    return dim_of(WeilRep(1, n, ctx)).dim


@dataclass(frozen=True)
class AdmissibleType:
    n_bar: tuple
    m_bar: tuple
    ctx: object

    def __post_init__(self):
        _need_even(self.ctx)
        n_bar, m_bar = tuple(self.n_bar), tuple(self.m_bar)
        if len(n_bar) != len(m_bar) or not n_bar:
            raise ValueError("n_bar and m_bar must be non-empty and of equal length")
        if any(b <= a for a, b in zip(n_bar, n_bar[1:])):
            raise ValueError("n_bar must be strictly increasing")
        if n_bar[0] < 1 or any(m < 1 for m in m_bar):
            raise ValueError("entries must be >= 1")
        object.__setattr__(self, "n_bar", n_bar)
        object.__setattr__(self, "m_bar", m_bar)

    @property
    def dim(self):
        return sum(m * d_of_n_even(n, self.ctx) for n, m in zip(self.n_bar, self.m_bar))

    def __str__(self):
        return f"({','.join(map(str, self.n_bar))};{','.join(map(str, self.m_bar))})"


def admissible_types(d, ctx, n_bound=N_BOUND):
    """All types with sum m_i d(n_i) = d, sorted by their (n, m) lists."""
    _need_even(ctx)
    if d < 1:
        raise ValueError("d must be >= 1")
    pool = [(n, k) for n in range(1, n_bound + 1) if (k := d_of_n_even(n, ctx)) <= d]
    out = []

    def rec(i, left, ns, ms):
        if left == 0:
            out.append(AdmissibleType(tuple(ns), tuple(ms), ctx))
            return
        for j in range(i, len(pool)):
            n, k = pool[j]
            for m in range(1, left // k + 1):
                ns.append(n)
                ms.append(m)
                rec(j + 1, left - m * k, ns, ms)
                ns.pop()
                ms.pop()

    rec(0, d, [], [])
    out.sort(key=lambda t: list(zip(t.n_bar, t.m_bar)))
    return out


def multiple_weil_of_type(t):
    # pi_i = (-p)^(a/2) zeta_{n_i} = (-1)^(a/2) sqrt(q) zeta_{n_i}
    s = -1 if (t.ctx.a // 2) % 2 else 1
    return MultipleWeil.of([(canonicalize(s, n, t.ctx), m) for n, m in zip(t.n_bar, t.m_bar)])
