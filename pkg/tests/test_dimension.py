import pytest
from hypothesis import given, settings, strategies as st

from abvar_census.arith import primes_in
from abvar_census.dimension import (CM_F, CM_Q, REAL_EVEN, REAL_ODD, condition_F_even, dim_of,
                                    enumerate_multiple, enumerate_simple, euler_phi)
from abvar_census.oracle import weil_degree
from abvar_census.weil import PrimePower, WeilRep, canonicalize

PRIMES_50 = primes_in(2, 50)


def simple_set(p, a, d):
    return {(w.sign, w.n) for w in enumerate_simple(PrimePower(p, a), d)}


@pytest.mark.parametrize("n,want", [(1, 1), (12, 4), (28, 12), (60, 16)])
def test_euler_phi(n, want):
    assert euler_phi(n) == want


@pytest.mark.parametrize("n,p,want", [(3, 13, False), (5, 7, True), (9, 3, True), (8, 3, True), (4, 5, False)])
def test_condition_F(n, p, want):
    assert condition_F_even(n, p) is want


@pytest.mark.parametrize("s,n,p,a,want", [(1, 5, 5, 1, 2), (1, 28, 7, 1, 3), (1, 40, 2, 1, 4),
                                          (1, 8, 3, 2, 2), (-1, 5, 5, 1, 2), (1, 1, 7, 1, 2),
                                          (1, 1, 7, 2, 1), (1, 36, 3, 3, 3)])
def test_dim_examples(s, n, p, a, want):
    assert dim_of(WeilRep(s, n, PrimePower(p, a))).dim == want


@pytest.mark.parametrize("n,phi_n,special,d_special,d_other", [
    (3, 2, None, None, 2), (5, 4, 5, 2, 4), (7, 6, None, None, 6), (9, 6, None, None, 6),
    (11, 10, None, None, 10), (13, 12, 13, 6, 12), (15, 8, 5, 4, 8),
])
def test_odd_n_table(n, phi_n, special, d_special, d_other):
    assert euler_phi(n) == phi_n
    for p in PRIMES_50:
        want = d_special if p == special else d_other
        assert dim_of(WeilRep(1, n, PrimePower(p, 1))).dim == want, p


@pytest.mark.parametrize("n,special,d_special,d_other", [
    (4, None, None, 1), (8, 2, 1, 2), (12, 3, 1, 2), (16, None, None, 4), (20, None, None, 4),
    (24, 2, 2, 4), (28, 7, 3, 6), (32, None, None, 8), (36, 3, 3, 6), (40, 2, 4, 8),
    (44, 11, 5, 10), (48, None, None, 8), (56, 2, 6, 12), (60, 3, 4, 8),
])
def test_4k_table(n, special, d_special, d_other):
    for p in PRIMES_50:
        want = d_special if p == special else d_other
        assert dim_of(WeilRep(1, n, PrimePower(p, 3))).dim == want, p


EVEN_TABLE_N = [3, 4, 5, 7, 8, 9, 11, 12, 15, 16, 20, 21, 24]


@pytest.mark.parametrize("n", EVEN_TABLE_N)
def test_even_table_values(n):
    for p in primes_in(2, 400):
        data = dim_of(WeilRep(1, n, PrimePower(p, 2)))
        f = euler_phi(n)
        assert data.dim == (f // 2 if data.case_tag == CM_F else f)


@pytest.mark.parametrize("n", [3, 4, 5, 8, 12, 15, 16, 20, 24])
def test_even_power_of_two_degree_rule(n):
    # [K:Q] a power of 2: (Q) exactly when p = 1 mod n
    for p in primes_in(2, 400):
        tag = dim_of(WeilRep(1, n, PrimePower(p, 4))).case_tag
        assert (tag == CM_Q) == (p % n == 1), p


@pytest.mark.parametrize("p", PRIMES_50 + [53, 97, 101, 193, 337])
def test_even_exponent_small_dims(p):
    def ns(cands, cond):
        return {n for n in cands if cond(n)}
    want = {
        1: {1} | ns([3, 4], lambda n: p % n != 1),
        2: ns([3, 4], lambda n: p % n == 1) | ns([5, 8, 12], lambda n: p % n != 1),
        3: ns([7], lambda n: p % 7 not in (1, 2, 4)) | ns([9], lambda n: p % 9 not in (1, 4, 7)),
        4: ns([5, 8, 12], lambda n: p % n == 1) | ns([15, 16, 20, 24], lambda n: p % n != 1),
    }
    for d in range(1, 5):
        got = simple_set(p, 2, d)
        assert {n for _, n in got} == want[d], d
        for s, n in got:
            # odd n carries both signs, 4 | n only the positive one
            assert (s, n) in got and ((-s, n) in got) == (n % 2 == 1)


@pytest.mark.parametrize("a", [1, 3])
@pytest.mark.parametrize("p", PRIMES_50)
def test_odd_exponent_small_dims(p, a):
    pm = lambda n: {(1, n), (-1, n)}
    want = {
        1: {(1, 4)} | (pm(8) if p == 2 else set()) | (pm(12) if p == 3 else set()),
        2: ({(1, 1), (1, 3)} | (pm(5) if p == 5 else set()) | ({(1, 8)} if p != 2 else set())
            | ({(1, 12)} if p != 3 else set()) | (pm(24) if p == 2 else set())),
        3: (pm(28) if p == 7 else set()) | (pm(36) if p == 3 else set()),
        4: (({(1, 5)} if p != 5 else pm(15)) | {(1, 16), (1, 20)}
            | ({(1, 24)} if p != 2 else pm(40)) | (pm(60) if p == 3 else set())),
    }
    for d in range(1, 5):
        assert simple_set(p, a, d) == want[d], d


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 13, 17])
def test_odd_dimension_against_field_degree(p):
    ctx = PrimePower(p, 1)
    for n in range(3, 61):
        if n % 4 == 2:
            continue
        assert 2 * dim_of(WeilRep(1, n, ctx)).dim == weil_degree(n, p, "odd"), n


@pytest.mark.parametrize("p", [2, 3, 7, 13])
def test_even_field_degree_is_phi(p):
    for n in (3, 4, 5, 8, 9, 12, 15, 16):
        assert weil_degree(n, p, "even") == euler_phi(n)


@given(st.sampled_from(PRIMES_50), st.integers(1, 4), st.integers(1, 120))
def test_dim_data_invariants(p, a, n):
    ctx = PrimePower(p, a)
    w = canonicalize(1, n, ctx)
    data = dim_of(w)
    if data.case_tag == CM_F:
        assert 2 * data.dim == data.field_degree
    else:
        # CM_Q and the real classes: End^0 is quaternion over K, d = [K:Q]
        assert data.dim == data.field_degree
    if data.case_tag in (REAL_EVEN, REAL_ODD):
        assert w.n == 1
    tw = canonicalize(-1, n, ctx)
    assert dim_of(tw).dim == data.dim


def test_dimension_one_counts():
    assert [len(enumerate_simple(PrimePower(p), 1)) for p in (2, 3, 5, 7, 101)] == [3, 3, 1, 1, 1]


def test_enumerate_simple_needs_bound_above_four():
    with pytest.raises(ValueError):
        enumerate_simple(PrimePower(7), 5)
    assert enumerate_simple(PrimePower(7), 6, n_max=60)


def test_multiple_examples():
    seven = enumerate_multiple(PrimePower(7), 2)
    assert len(seven) == 5
    assert sum(1 for pi in seven if not pi.is_simple) == 1
    two = enumerate_multiple(PrimePower(2), 2)
    assert len(two) == 11
    assert sum(1 for pi in two if pi.is_simple) == 5
    assert len(enumerate_multiple(PrimePower(13), 1)) == 1


@given(st.sampled_from(PRIMES_50), st.integers(1, 3), st.integers(1, 4))
@settings(max_examples=40, deadline=None)
def test_multiple_total_dimension(p, a, d):
    out = enumerate_multiple(PrimePower(p, a), d)
    assert all(pi.dim == d for pi in out)
    assert len(set(out)) == len(out)
