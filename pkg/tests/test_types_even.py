import pytest
from hypothesis import given, settings, strategies as st

from abvar_census.arith import primes_in
from abvar_census.dimension import enumerate_multiple
from abvar_census.oracle import curve_classes
from abvar_census.types_even import AdmissibleType, admissible_types, d_of_n_even, multiple_weil_of_type
from abvar_census.weil import PrimePower

P7 = PrimePower(7, 2)


@pytest.mark.parametrize("n,want", [(1, 1), (2, 1), (6, 2), (8, 2), (3, 2), (4, 1), (10, 2), (12, 2), (14, 3)])
def test_d_of_n(n, want):
    assert d_of_n_even(n, P7) == want


def test_types_examples():
    assert [(t.n_bar, t.m_bar) for t in admissible_types(1, P7)] == [((1,), (1,)), ((2,), (1,)), ((4,), (1,))]
    two = admissible_types(2, P7)
    assert len(two) == 12
    singles = {t.n_bar[0] for t in two if t.m_bar == (1,) and len(t.n_bar) == 1}
    assert singles == {3, 5, 6, 8, 10, 12}
    assert {t.n_bar for t in two if t.m_bar == (2,)} == {(1,), (2,), (4,)}
    assert {t.n_bar for t in two if len(t.n_bar) == 2} == {(1, 2), (1, 4), (2, 4)}
    assert len(admissible_types(1, PrimePower(13, 2))) == 2


def test_type_to_weil_examples():
    pi = multiple_weil_of_type(AdmissibleType((3, 6), (1, 1), P7))
    assert [(w.sign, w.n, m) for w, m in pi.factors] == [(1, 3, 1), (-1, 3, 1)]
    pi = multiple_weil_of_type(AdmissibleType((4,), (1,), P7))
    assert [(w.sign, w.n) for w, _ in pi.factors] == [(1, 4)]
    # a = 2: (-p) = -sqrt(q), a = 4: (-p)^2 = +sqrt(q)
    assert multiple_weil_of_type(AdmissibleType((1,), (2,), P7)).factors[0][0].sign == -1
    assert multiple_weil_of_type(AdmissibleType((1,), (2,), PrimePower(7, 4))).factors[0][0].sign == 1


def test_validation():
    with pytest.raises(ValueError):
        AdmissibleType((3, 3), (1, 1), P7)
    with pytest.raises(ValueError):
        AdmissibleType((3,), (1, 1), P7)
    with pytest.raises(ValueError):
        admissible_types(1, PrimePower(7, 1))
    with pytest.raises(ValueError):
        d_of_n_even(3, PrimePower(7, 3))


@pytest.mark.parametrize("p", primes_in(2, 50))
@pytest.mark.parametrize("a", [2, 4])
def test_bijection_with_multiple_weil_numbers(p, a):
    ctx = PrimePower(p, a)
    for d in range(1, 5):
        types = admissible_types(d, ctx)
        images = [multiple_weil_of_type(t) for t in types]
        assert all(t.dim == d for t in types)
        assert len(set(images)) == len(images)
        assert set(images) == set(enumerate_multiple(ctx, d))


@pytest.mark.parametrize("q", [4, 9, 25, 49, 121, 169])
def test_dimension_one_types_match_curve_isogeny_classes(q):
    p = {4: 2, 9: 3, 25: 5, 49: 7, 121: 11, 169: 13}[q]
    traces = {c.trace for c in curve_classes(q) if c.supersingular}
    assert len(admissible_types(1, PrimePower(p, 2))) == len(traces)
