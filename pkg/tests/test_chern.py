import itertools
import math
from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from chernsub.chern import (
    TruncatedSeries,
    c1,
    c2,
    c2_from_character,
    c2_product_rule,
    chern_character,
    total_chern,
)
from chernsub.repring import LaurentElement, phi1_star_lambda


def esp_oracle(roots, N):
    """Elementary symmetric polynomials e_0..e_N of a root list, by subsets."""
    return [sum(math.prod(s) for s in itertools.combinations(roots, k)) for k in range(N + 1)]


def roots_of(v):
    return [a for a, m in v.items() for _ in range(m)]


def series_mul(a, b, N):
    out = [0] * (N + 1)
    for i, x in enumerate(a[: N + 1]):
        for j, y in enumerate(b[: N + 1 - i]):
            out[i + j] += x * y
    return out


def split_virtual(v):
    pos = LaurentElement({a: m for a, m in v.items() if m > 0})
    neg = LaurentElement({a: -m for a, m in v.items() if m < 0})
    return pos, neg


virtual = st.dictionaries(st.integers(-5, 5), st.integers(-10, 10), max_size=5).map(LaurentElement)
small_genuine = st.dictionaries(st.integers(-5, 5), st.integers(0, 3), max_size=4).map(LaurentElement)


def symmetric(d):
    out = Counter()
    for a, m in d.items():
        out[a] += m
        out[-a] += m
    return LaurentElement(out)


symmetric_virtual = st.dictionaries(st.integers(0, 5), st.integers(-10, 10), max_size=4).map(symmetric)


# --------------------------------------------------------------------------


def test_total_chern_examples():
    assert total_chern(phi1_star_lambda(1, 3), 2).coeffs == (1, 0, -1)
    assert total_chern(LaurentElement({0: 17}), 2) == TruncatedSeries.one(2)
    inv = total_chern(-LaurentElement({1: 1, -1: 1}), 2)
    assert series_mul(list(inv.coeffs), [1, 0, -1], 2) == [1, 0, 0]
    assert inv.coeffs == (1, 0, 1)


@given(small_genuine)
def test_total_chern_genuine_matches_subset_oracle(v):
    N = 3
    if len(roots_of(v)) > 12:
        return
    assert list(total_chern(v, N).coeffs) == esp_oracle(roots_of(v), N)


@given(virtual)
def test_total_chern_virtual_times_denominator(v):
    # c(P - Q) * c(Q) = c(P), with c(P), c(Q) computed independently
    N = 4
    pos, neg = split_virtual(v)
    c_v = list(total_chern(v, N).coeffs)
    c_q = list(total_chern(neg, N).coeffs)
    c_p = list(total_chern(pos, N).coeffs)
    assert series_mul(c_v, c_q, N) == c_p


@given(virtual, virtual)
def test_whitney(v, w):
    for N in (2, 4):
        assert total_chern(v + w, N) == total_chern(v, N) * total_chern(w, N)


@given(virtual, virtual)
def test_character_multiplicative(v, w):
    for N in (2, 3):
        assert chern_character(v * w, N) == chern_character(v, N) * chern_character(w, N)


def test_chern_character_examples():
    assert chern_character(LaurentElement({1: 1}), 2).coeffs == (1, 1, Fraction(1, 2))
    assert chern_character(phi1_star_lambda(1, 3), 2).coeffs == (9, 0, 1)


def test_c1_c2_extraction():
    s = total_chern(phi1_star_lambda(2, 3), 2)
    assert c1(s) == 0 and c2(s) == -7
    assert c2(TruncatedSeries.one(2)) == 0
    with pytest.raises(ValueError):
        c2(TruncatedSeries([1, 0], 1))
    with pytest.raises(ValueError):
        c1(TruncatedSeries([1], 0))
    with pytest.raises(ValueError):
        c2(TruncatedSeries([2, 0, 1], 2))


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_lambda_closed_form_c2(p):
    for ell in range(1, p * p):
        s = total_chern(phi1_star_lambda(ell, p), 2)
        assert c1(s) == 0
        assert c2(s) == -math.comb(p * p - 2, ell - 1)


def test_lambda_full_series_is_power_of_one_minus_t_squared():
    p, N = 3, 6
    for ell in range(1, p * p):
        m = math.comb(p * p - 2, ell - 1)
        expected = [1] + [0] * N
        for _ in range(m):
            expected = series_mul(expected, [1, 0, -1], N)
        assert list(total_chern(phi1_star_lambda(ell, p), N).coeffs) == expected


def test_c2_from_character_examples():
    assert c2_from_character(phi1_star_lambda(1, 3)) == -1
    assert c2_from_character(LaurentElement({0: 5})) == 0
    with pytest.raises(ValueError):
        c2_from_character(LaurentElement({1: 1}))


@given(symmetric_virtual)
def test_dual_path_c2(v):
    assert c2_from_character(v) == c2(total_chern(v, 2))


def test_c2_product_rule_examples():
    a = phi1_star_lambda(1, 3)
    direct = esp_oracle(roots_of(a * a), 2)[2]
    assert direct == -18
    assert c2_product_rule(9, -1, 9, -1) == direct
    assert c2_product_rule(4, 0, 11, 0) == 0
    lp = phi1_star_lambda(3, 3)
    rule = c2_product_rule(lp.dim(), c2(total_chern(lp)), a.dim(), c2(total_chern(a)))
    assert rule == c2(total_chern(lp * a))


@given(symmetric_virtual, symmetric_virtual)
def test_product_rule_equivalence(v, w):
    direct = c2(total_chern(v * w, 2))
    assert direct == c2_product_rule(v.dim(), c2(total_chern(v)), w.dim(), c2(total_chern(w)))


# --------------------------------------------------------------------------
# TruncatedSeries


def test_series_truncation_and_inverse():
    s = TruncatedSeries([1, 2, 3, 4], 2)
    assert s.coeffs == (1, 2, 3)
    assert s * s.inverse() == TruncatedSeries.one(2)
    half = TruncatedSeries([2, 1], 3).inverse()
    assert half.coeffs == (Fraction(1, 2), Fraction(-1, 4), Fraction(1, 8), Fraction(-1, 16))
    assert (s ** -3) * (s ** 3) == TruncatedSeries.one(2)
    with pytest.raises(ZeroDivisionError):
        TruncatedSeries([0, 1], 2).inverse()


def test_mixed_truncation_degrees():
    a = TruncatedSeries([1, 1, 1, 1], 3)
    b = TruncatedSeries([1, 1], 1)
    assert (a * b).N == 1 and (a + b).N == 1


@given(virtual)
def test_character_constant_term_is_dimension(v):
    assert chern_character(v, 2)[0] == v.dim()
    assert total_chern(v, 2)[0] == 1
