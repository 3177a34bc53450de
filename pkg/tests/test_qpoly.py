from __future__ import annotations

from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from clustersieve.qpoly import (
    binom,
    ComplexType,
    InexactDivision,
    NonConstantRemainder,
    QPolynomial,
    RootOfUnitySpec,
    catalan,
    closed_form_eval,
    coxeter_datum,
    cyclotomic,
    divisors,
    eval_at_primitive_root,
    face_count,
    face_poly,
    face_poly_d_alternate,
    format_residues,
    gauss_binomial,
    gauss_binomial_by_division,
    q_catalan,
    q_int,
    q_lucas,
)

P = QPolynomial
small = st.integers(min_value=0, max_value=14)
polys = st.lists(st.integers(-5, 5), max_size=8).map(QPolynomial)


def test_basic_arithmetic():
    a = P([1, 1])
    assert a * a == P([1, 2, 1])
    assert (a * a).exact_div(a) == a
    assert str(P([1, 1, 2])) == "1 + q + 2*q^2"
    assert P([0, 0, 0]).is_zero()
    assert P([3, 0, 0]).degree == 0
    assert P([1, 2, 3])(2) == 17


def test_inexact_division_raises():
    with pytest.raises(InexactDivision):
        P([1, 0, 1]).exact_div(P([1, 1]))


@given(polys, polys)
def test_ring_laws(a, b):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) * a == a * a + b * a


@given(polys, st.integers(1, 4))
def test_divmod_identity(a, d):
    q, r = a.divmod(cyclotomic(d))
    assert q * cyclotomic(d) + r == a
    assert r.degree < cyclotomic(d).degree


def test_gauss_binomial_known():
    # [5 choose 2]_q = 1 + q + 2q^2 + 2q^3 + 2q^4 + q^5 + q^6
    assert gauss_binomial(5, 2).coeffs == (1, 1, 2, 2, 2, 1, 1)
    assert gauss_binomial(3, 5) == P()
    assert gauss_binomial(4, 0) == P([1])


@given(small, small)
def test_gauss_binomial_recurrence_matches_division(m, k):
    assert gauss_binomial(m, k) == gauss_binomial_by_division(m, k)
    assert gauss_binomial(m, k).at_one() == comb(m, k)


@given(small, small)
def test_gauss_binomial_symmetric_and_palindromic(m, k):
    if k <= m:
        g = gauss_binomial(m, k)
        assert g == gauss_binomial(m, m - k)
        assert g.is_palindromic()


@given(small, small)
def test_base_q2_is_substitution(m, k):
    assert gauss_binomial(m, k, base=2) == gauss_binomial(m, k).substitute_power(2)


@pytest.mark.parametrize("N", range(1, 65))
def test_cyclotomic_product_reconstructs(N):
    prod = P([1])
    for d in divisors(N):
        prod = prod * cyclotomic(d)
    assert prod == P([-1] + [0] * (N - 1) + [1])


def test_eval_at_primitive_root():
    assert eval_at_primitive_root(q_int(4), 2) == 0
    assert eval_at_primitive_root(q_int(4), 1) == 4
    assert eval_at_primitive_root(P([1, 1, 1]), RootOfUnitySpec(3)) == 0
    p = P([2, 1, 2, 1, 2, 1, 2, 1])
    assert eval_at_primitive_root(p, 2) == 4


def test_nonconstant_remainder():
    with pytest.raises(NonConstantRemainder) as info:
        eval_at_primitive_root(P([0, 1]), 3)
    assert info.value.d == 3


@given(st.integers(1, 20), st.integers(0, 20), st.integers(2, 10))
def test_q_lucas_matches_reduction(m, k, d):
    try:
        expected = eval_at_primitive_root(gauss_binomial(m, k), d)
    except NonConstantRemainder:
        # the value is not an integer; q-Lucas reduces to the same small binomial
        with pytest.raises(NonConstantRemainder):
            q_lucas(m, k, d)
        return
    assert q_lucas(m, k, d) == expected


def test_residues_a_example():
    t = ComplexType("A", 3, 2)
    assert face_poly(t, 2).residues(8) == (2, 1, 2, 1, 2, 1, 2, 1)
    assert ComplexType("B", 3, 1).group_order == 8
    assert face_poly(ComplexType("B", 3, 1), 1).residues(8) == (3, 0, 3, 0, 3, 0, 3, 0)
    assert face_poly(ComplexType("D", 2, 3), 2).residues(8) == (4, 0, 4, 0, 4, 0, 4, 0)


def test_complex_type_validation():
    with pytest.raises(ValueError):
        ComplexType("C", 3, 1)
    with pytest.raises(ValueError):
        ComplexType("A", 3, 0)
    with pytest.raises(ValueError):
        ComplexType("I2", 2, 1)
    with pytest.raises(ValueError):
        ComplexType("A", 3, 1).check_k(3)


GRID = [("A", s, n) for s in range(1, 4) for n in range(1, 7)] + \
       [("B", s, n) for s in range(1, 4) for n in range(2, 6)] + \
       [("D", s, n) for s in range(1, 4) for n in range(2, 6)] + \
       [("I2", s, a) for s in range(1, 5) for a in range(3, 9)]


@pytest.mark.parametrize("family,s,n", GRID)
def test_face_poly_at_one_is_count(family, s, n):
    t = ComplexType(family, n, s)
    for k in range(t.max_k + 1):
        assert face_poly(t, k).at_one() == face_count(t, k)


@pytest.mark.parametrize("family,s,n", GRID)
def test_closed_forms_match_cyclotomic(family, s, n):
    t = ComplexType(family, n, s)
    for k in range(t.max_k + 1):
        p = face_poly(t, k)
        for d in divisors(t.group_order):
            assert closed_form_eval(t, k, d) == eval_at_primitive_root(p, d), (k, d)


def test_closed_form_rejects_bad_divisor():
    with pytest.raises(ValueError):
        closed_form_eval(ComplexType("A", 3, 2), 2, 3)


@pytest.mark.parametrize("s", range(1, 4))
@pytest.mark.parametrize("n", range(2, 7))
def test_type_d_count_decompositions(s, n):
    r = s * (n - 1)
    for k in range(n + 1):
        f = face_count(ComplexType("D", n, s), k)
        first = comb(r + k, k) * comb(n - 1, k) + comb(r + k, k) * binom(n - 2, k - 1)
        second = binom(r + k - 1, k - 1) * binom(n - 2, k - 2) + 2 * comb(r + k - 1, k) * binom(n - 2, k - 2)
        second_alt = comb(r + k, k) * binom(n - 2, k - 2) + comb(r + k - 1, k) * binom(n - 2, k - 2)
        first_alt = comb(r + k, k) * binom(n - 2, k) + 2 * comb(r + k, k) * binom(n - 2, k - 1)
        assert first + second == first + second_alt == first_alt + second_alt == f


@pytest.mark.parametrize("s", range(1, 4))
@pytest.mark.parametrize("n", range(2, 7))
def test_alternative_type_d_polynomial(s, n):
    t = ComplexType("D", n, s)
    for k in range(n + 1):
        alt, main = face_poly_d_alternate(s, n, k), face_poly(t, k)
        assert alt.at_one() == face_count(t, k)
        for d in divisors(t.group_order):
            assert eval_at_primitive_root(alt, d) == eval_at_primitive_root(main, d)
    if n >= 3:
        assert face_poly_d_alternate(s, n, n) == q_catalan(coxeter_datum("D", n), s)


def test_a_type_counts():
    assert face_count(ComplexType("A", 3, 2), 2) == 12
    assert face_count(ComplexType("A", 4, 1), 2) == 21
    assert face_count(ComplexType("D", 4, 1), 4) == 50


@pytest.mark.parametrize("s", range(1, 5))
@pytest.mark.parametrize("n", range(2, 9))
def test_catalan_matches_top_faces(s, n):
    # type A_{n-1} facets are the (n-1)-diagonal dissections of the (sn+2)-gon
    assert q_catalan(coxeter_datum("A", n - 1), s) == face_poly(ComplexType("A", n, s), n - 1)
    assert q_catalan(coxeter_datum("B", n), s) == face_poly(ComplexType("B", n, s), n)
    if n >= 3:
        assert q_catalan(coxeter_datum("D", n), s) == face_poly(ComplexType("D", n, s), n)


def test_exceptional_catalan_numbers():
    assert catalan(coxeter_datum("E6")) == 833
    assert catalan(coxeter_datum("E7")) == 4160
    assert catalan(coxeter_datum("E8")) == 25080
    assert catalan(coxeter_datum("F4")) == 105
    assert catalan(coxeter_datum("H3")) == 32
    assert catalan(coxeter_datum("H4")) == 280
    assert coxeter_datum("E8").h == 30


def test_i2_catalan_is_edge_polynomial():
    for s in range(1, 4):
        for a in range(3, 9):
            assert q_catalan(coxeter_datum("I2", a), s) == face_poly(ComplexType("I2", a, s), 2)


def test_format_residues():
    assert format_residues((6, 0, 5, 0, 5, 0, 6, 0, 5, 0, 5, 0)) == "6+5q^2+5q^4+6q^6+5q^8+5q^{10}"
    assert format_residues((2, 1, 0)) == "2+1q"
    assert format_residues((1, 1, 1, 1, 1), 2, 1) == "1+1q+\\cdots+1q^4"
    assert format_residues(()) == "0"


def test_q_lucas_rejects_trivial_root():
    with pytest.raises(ValueError):
        q_lucas(4, 2, 1)
