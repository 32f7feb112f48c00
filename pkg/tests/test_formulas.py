from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracle
from ncsieve.algebra import Poly, binomial, q_binomial
from ncsieve.formulas import (
    QFormula,
    a_convolution,
    closed_a,
    closed_d,
    closed_f,
    closed_s2_even,
    closed_s2_odd,
    closed_sd,
    connected_at_root,
    count_connected,
    family_count,
    family_of,
    family_parameters,
    family_qpoly,
    qpoly_connected,
)
from ncsieve.ncgraph import count, count_antipodal_pairs, count_fixed


def test_count_connected_examples():
    assert count_connected(2, 1) == 1
    assert count_connected(4, 3) == 12
    assert count_connected(4, 4) == 9
    assert count_connected(4, 6) == 0
    assert count_connected(4, 2) == 0


def test_qpoly_examples():
    assert qpoly_connected(4, 5) == Poly((1, 0, 1))
    assert qpoly_connected(3, 3) == Poly((1,))
    assert qpoly_connected(2, 1) == Poly((1,))


def test_at_root_examples():
    assert connected_at_root(4, 5, 2) == 2
    assert connected_at_root(4, 5, 4) == 0
    assert connected_at_root(6, 7, 3) == 0
    with pytest.raises(ValueError):
        connected_at_root(6, 7, 4)


def unimodal(cs):
    i = 0
    while i + 1 < len(cs) and cs[i] <= cs[i + 1]:
        i += 1
    return all(cs[j] >= cs[j + 1] for j in range(i, len(cs) - 1))


@pytest.mark.parametrize("n", range(2, 13))
def test_qpoly_symmetric_nonnegative(n):
    for k in range(n - 1, 2 * n - 2):
        num = q_binomial(3 * n - 3, n + k) * q_binomial(k - 1, n - 2)
        assert num.coeffs == num.coeffs[::-1]
        assert unimodal(num.coeffs)
        cs = qpoly_connected(n, k).coeffs
        assert cs == cs[::-1]
        assert all(c >= 0 for c in cs)


def test_quotient_need_not_be_unimodal():
    assert not unimodal(qpoly_connected(4, 5).coeffs)


def test_half_turn_closed_forms():
    assert closed_s2_odd(4, 3) == 4
    assert closed_s2_odd(4, 5) == 2
    assert closed_s2_odd(2, 1) == 1
    assert closed_s2_even(4, 4) == 1
    assert closed_s2_even(4, 6) == 0
    assert closed_s2_even(6, 8) == 3
    with pytest.raises(ValueError):
        closed_s2_odd(4, 4)
    with pytest.raises(ValueError):
        closed_s2_even(5, 4)


def test_auxiliary_closed_forms():
    assert closed_a(2, 2) == 5
    assert closed_a(2, 3) == 2
    assert closed_a(1, 1) == 1
    assert closed_d(4, 2) == 7
    assert closed_d(3, 1) == 2
    assert closed_d(3, 2) == 0
    assert closed_f(3, 2) == 2
    assert closed_f(4, 5) == 2
    assert closed_f(2, 1) == 1
    assert closed_sd(6, 6, 3) == 5
    assert closed_sd(6, 7, 3) == 0
    assert closed_sd(3, 3, 3) == 1


def test_a_convolution_examples():
    assert a_convolution(2, 2) == 5
    assert a_convolution(1, 1) == 1
    assert a_convolution(2, 3) == 2


@pytest.mark.parametrize("n", range(1, 6))
def test_a_three_ways(n):
    for k in range(0, 2 * n + 2):
        a = count_antipodal_pairs(n, k)
        assert a_convolution(n, k) == a == closed_a(n, k)
        assert a_convolution(n, k, f=closed_f) == a


@pytest.mark.parametrize("n", range(2, 13, 2))
def test_half_turn_closed_forms_match_root_values(n):
    for k in range(n - 1, 2 * n - 2):
        want = closed_s2_odd(n, k) if k % 2 else closed_s2_even(n, k)
        assert connected_at_root(n, k, 2) == want


@pytest.mark.parametrize("n", [3, 6, 9, 12, 4, 8])
def test_order_d_closed_forms(n):
    for d in (3, 4):
        if n % d:
            continue
        for k in range(n - 1, 2 * n - 2):
            assert connected_at_root(n, k, d) == closed_sd(n, k, d)


def test_family_examples():
    assert family_count("tree", 4) == 12
    assert family_count("dissection", 5, 2) == 5
    assert family_count("partition", 4, 2) == 6
    assert family_count("forest", 4, 2) == 14
    assert family_count("graph", 3, 2) == 3
    assert family_count("connected", 4, 4) == 9
    with pytest.raises(ValueError):
        family_count("hexagon", 4, 1)
    with pytest.raises(ValueError):
        family_count("forest", 4)


def test_family_examples_by_oracle():
    assert len(oracle.trees(4)) == 12
    assert len(oracle.dissections(5, 2)) == 5
    assert len(oracle.nc_partitions(4, 2)) == 6
    assert len(oracle.forests(4, 2)) == 14
    assert len(oracle.any_graphs(3, 2)) == 3


@pytest.mark.parametrize("tag", ["tree", "connected", "dissection", "partition", "forest", "graph"])
def test_family_counts_match_enumeration(tag):
    for n in range(1, 9):
        for k in family_parameters(tag, n):
            fam, edges = family_of(tag, k, n)
            assert family_count(tag, n, k) == count(n, edges, fam), (n, k)


@pytest.mark.parametrize("tag", ["tree", "connected", "dissection", "partition", "forest", "graph"])
def test_family_qpoly_at_one(tag):
    for n in range(1, 10):
        for k in family_parameters(tag, n):
            q = family_qpoly(tag, n, k)
            assert q.at_one() == family_count(tag, n, k)
            if q.is_polynomial:
                assert all(c >= 0 for c in q.quotient.coeffs)


def test_out_of_range_is_zero():
    assert family_count("dissection", 5, 7) == 0
    assert family_count("partition", 4, 4) == 0
    assert family_count("forest", 4, 0) == 0
    assert family_qpoly("connected", 4, 9).quotient.is_zero()
    assert closed_a(3, 1) == 0
    assert closed_d(5, 1) == 0


def test_qformula_limit_path():
    # [4]/[2] is 1 + q^2; [3]/[2] is not a polynomial and has a pole at q = -1
    half = QFormula.build("x", Poly((1, 1, 1, 1)), Poly((1, 1)))
    assert half.is_polynomial and half.at_root(2).to_int() == 2
    bad = QFormula.build("y", Poly((1, 1, 1)), Poly((1, 1)))
    assert not bad.is_polynomial
    assert bad.at_root(3).is_zero()


@given(st.integers(2, 25), st.integers(0, 60))
def test_formula_range(n, k):
    v = count_connected(n, k)
    assert (v > 0) == (n - 1 <= k <= 2 * n - 3)
    assert qpoly_connected(n, k)(1) == v


@given(st.integers(3, 30), st.integers(0, 60))
def test_binomial_identity_property(n, k):
    lhs = binomial(3 * n - 5, n + k - 2) * binomial(k - 1, n - 2) + binomial(3 * n - 5, n + k - 1) * binomial(k, n - 2)
    rhs = (n - 2) * binomial(3 * n - 3, n + k) * binomial(k - 1, n - 2) + (2 * n - 2) * binomial(3 * n - 5, n + k) * binomial(k - 1, n - 3)
    if n - 1 <= k <= 2 * n - 3:
        assert (n - 2) * lhs == rhs


def test_fixed_counts_against_closed_forms():
    for n in (4, 6, 8):
        for k in range(n - 1, 2 * n - 2):
            want = closed_s2_odd(n, k) if k % 2 else closed_s2_even(n, k)
            assert count_fixed(n, k, 2) == want


@pytest.mark.parametrize("n", range(2, 13))
def test_two_forms_of_the_connected_q_analogue(n):
    # second factor written with k - n + 1 or with n - 2: equal by symmetry
    for k in range(n - 1, 2 * n - 2):
        assert q_binomial(k - 1, k - n + 1) == q_binomial(k - 1, n - 2)
        assert family_qpoly("connected", n, k).quotient == qpoly_connected(n, k)
