import itertools
import math
from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chernsub.repring import (
    CyclotomicElement,
    LaurentElement,
    OracleSkipped,
    SUPolynomial,
    delta1_star,
    in_trivial_span,
    laurent_mul,
    phi1_star,
    phi1_star_lambda,
    phi1_star_lambda_bruteforce,
    weight_sum_condition,
)


def expand(elements):
    """Product of Laurent polynomials by multiplying out every choice of terms."""
    out = Counter()
    for choice in itertools.product(*[list(e.items()) for e in elements]):
        out[sum(a for a, _ in choice)] += math.prod(m for _, m in choice)
    return LaurentElement(out)


def subset_oracle(ell, p):
    """Weights of the ell-th exterior power from a hand-rolled bitmask scan."""
    n = p * p
    weights = [1, -1] + [0] * (n - 2)
    out = Counter()
    for mask in range(1 << n):
        if bin(mask).count("1") == ell:
            out[sum(w for i, w in enumerate(weights) if mask >> i & 1)] += 1
    return LaurentElement(out)


# --------------------------------------------------------------------------
# LaurentElement


def test_laurent_canonical_form():
    e = LaurentElement({1: 2, 0: 0, -3: 1, 5: -1}) + LaurentElement({5: 1})
    assert e.terms == {-3: 1, 1: 2}
    assert LaurentElement({0: 0}) == LaurentElement()


def test_laurent_mul_examples():
    z, zi = LaurentElement.z(1), LaurentElement.z(-1)
    assert laurent_mul(z, zi) == LaurentElement.unit()
    a = LaurentElement({1: 1, -1: 1, 0: 7})
    expected = expand([a, a])
    assert expected == LaurentElement({2: 1, 1: 14, 0: 51, -1: 14, -2: 1})
    assert laurent_mul(a, a) == expected
    assert a * LaurentElement.unit() == a


laurents = st.dictionaries(st.integers(-5, 5), st.integers(-10, 10), max_size=6).map(LaurentElement)


@given(laurents, laurents, laurents)
def test_laurent_ring_laws(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == expand([a, b])
    assert (a * b).dim() == a.dim() * b.dim()


# --------------------------------------------------------------------------
# phi1*


def test_phi1_star_lambda_examples_p3():
    assert phi1_star_lambda(1, 3) == LaurentElement({1: 1, -1: 1, 0: 7})
    assert phi1_star_lambda(2, 3) == subset_oracle(2, 3)
    assert subset_oracle(2, 3) == LaurentElement({0: 22, 1: 7, -1: 7})
    assert phi1_star_lambda(8, 3) == subset_oracle(8, 3)
    assert subset_oracle(8, 3) == LaurentElement({1: 1, -1: 1, 0: 7})


@pytest.mark.parametrize("ell", range(1, 9))
def test_phi1_star_lambda_matches_bitmask_oracle_p3(ell):
    assert phi1_star_lambda(ell, 3) == subset_oracle(ell, 3)


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_phi1_star_lambda_dimension_and_conjugation(p):
    for ell in range(1, p * p):
        v = phi1_star_lambda(ell, p)
        assert v.dim() == math.comb(p * p, ell)
        assert v.conjugate() == v
        assert v.is_genuine()


@pytest.mark.parametrize("ell", [0, 9, -1])
def test_phi1_star_lambda_rejects_range(ell):
    with pytest.raises(ValueError):
        phi1_star_lambda(ell, 3)


def test_phi1_star_examples():
    p = 3
    lam1 = SUPolynomial.lam(1, p)
    assert phi1_star(lam1) == LaurentElement({1: 1, -1: 1, 0: 7})
    assert phi1_star(SUPolynomial.unit(p)) == LaurentElement.unit()
    assert phi1_star(lam1 * lam1) == laurent_mul(phi1_star(lam1), phi1_star(lam1))


def su_polys(p):
    keys = st.lists(st.integers(1, p * p - 1), max_size=3).map(lambda k: tuple(sorted(k)))
    return st.dictionaries(keys, st.integers(-6, 6), max_size=4).map(lambda d: SUPolynomial(p, d))


@settings(max_examples=60)
@given(su_polys(3), su_polys(3))
def test_restrictions_are_ring_homomorphisms(x, y):
    assert phi1_star(x * y) == phi1_star(x) * phi1_star(y)
    assert phi1_star(x + y) == phi1_star(x) + phi1_star(y)
    assert delta1_star(x * y) == delta1_star(x) * delta1_star(y)
    assert delta1_star(x + y) == delta1_star(x) + delta1_star(y)
    assert phi1_star(x).conjugate() == phi1_star(x)


# --------------------------------------------------------------------------
# delta1*, trivial span, weight-sum filter


def test_delta1_star_examples():
    p = 3
    assert delta1_star(SUPolynomial.lam(1, p)).coeffs == (0, 9, 0)
    assert delta1_star(SUPolynomial.monomial((1, 2), p)).coeffs == (9 * 36, 0, 0)
    assert delta1_star(SUPolynomial.unit(p)).coeffs == (1, 0, 0)


def test_in_trivial_span():
    assert in_trivial_span(CyclotomicElement(3, (324, 0, 0)))
    assert not in_trivial_span(CyclotomicElement(3, (0, 9, 0)))


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11])
def test_centre_restriction_of_lifted_generators(p):
    assert in_trivial_span(delta1_star(SUPolynomial.lam(p, p)))
    assert in_trivial_span(delta1_star(SUPolynomial.lam(1, p) ** p))
    assert delta1_star(SUPolynomial.lam(p, p)).coeffs[0] == math.comb(p * p, p)
    assert delta1_star(SUPolynomial.lam(1, p) ** p).coeffs[0] == p ** (2 * p)


def test_weight_sum_condition_examples():
    p = 3
    assert not weight_sum_condition(SUPolynomial.lam(1, p))
    assert weight_sum_condition(SUPolynomial.monomial((1, 2), p))
    assert weight_sum_condition(SUPolynomial.lam(3, p) + SUPolynomial.monomial((1, 2), p) * 5)


@given(su_polys(3))
def test_weight_sum_condition_implies_trivial_centre(x):
    if weight_sum_condition(x):
        assert in_trivial_span(delta1_star(x))


def test_cyclotomic_length_checked():
    with pytest.raises(ValueError):
        CyclotomicElement(3, (1, 0))


def test_supolynomial_canonical_keys():
    x = SUPolynomial(3, {(2, 1): 4, (1, 2): -4, (3,): 1})
    assert dict(x.items()) == {(3,): 1}
    with pytest.raises(ValueError):
        SUPolynomial(3, {(9,): 1})
    assert x.alpha((3,)) == 1 and x.alpha((1, 2)) == 0


# --------------------------------------------------------------------------
# Brute-force oracle


def test_bruteforce_examples_p3():
    assert phi1_star_lambda_bruteforce(2, 3) == LaurentElement({0: 22, 1: 7, -1: 7})
    assert phi1_star_lambda_bruteforce(1, 3) == LaurentElement({1: 1, -1: 1, 0: 7})
    assert phi1_star_lambda_bruteforce(4, 3) == phi1_star_lambda(4, 3)


@pytest.mark.parametrize("ell", range(1, 9))
def test_bruteforce_matches_bitmask_oracle(ell):
    assert phi1_star_lambda_bruteforce(ell, 3) == subset_oracle(ell, 3)


def test_bruteforce_cap():
    with pytest.raises(OracleSkipped) as info:
        phi1_star_lambda_bruteforce(4, 3, cap=100)
    assert info.value.count == 126
    assert phi1_star_lambda_bruteforce(4, 3, cap=126) == phi1_star_lambda(4, 3)


def test_bruteforce_independent_of_workers():
    for ell in (1, 4, 8):
        assert phi1_star_lambda_bruteforce(ell, 3, workers=2) == phi1_star_lambda_bruteforce(ell, 3)
