import cmath
from itertools import combinations

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from affsieve.cartan import affine_type, datum, supported_types
from affsieve.qpoly import (BiQPolynomial, QPolynomial, cyclotomic, eval_at_primitive_root, eval_bicyclic_signs,
                            q_binomial, reduce_mod_bicyclic, reduce_mod_cyclic, series_coefficient, weight_gen_poly)
from affsieve.weights import classes, enumerate_level, is_bicyclic, s_evaluation

A3 = affine_type("A1", 3)
BINOM_5_2 = QPolynomial([1, 1, 2, 2, 2, 1, 1])


def partitions_in_box_poly(rows, cols):
    """Size generating function of partitions in a rows x cols box, via lattice paths."""
    coeffs = {}
    for ups in combinations(range(rows + cols), rows):
        # area under the path equals the number of inversions
        size = sum(u - k for k, u in enumerate(ups))
        coeffs[size] = coeffs.get(size, 0) + 1
    return QPolynomial(coeffs.get(k, 0) for k in range(max(coeffs) + 1))


def test_q_binomial_examples():
    assert q_binomial(4, 2) == QPolynomial([1, 1, 2, 1, 1]) == partitions_in_box_poly(2, 2)
    assert q_binomial(7, 0) == QPolynomial([1])
    assert q_binomial(2, 3).is_zero()
    assert q_binomial(5, 2) == BINOM_5_2 == weight_gen_poly(A3, 2)


@pytest.mark.parametrize("a", range(0, 9))
def test_q_binomial_properties(a):
    for b in range(a + 1):
        p = q_binomial(a, b)
        assert p.degree == b * (a - b)
        assert p.is_palindromic()
        assert all(c > 0 for c in p.coeffs)
        assert p == partitions_in_box_poly(b, a - b)


def test_polynomial_arithmetic():
    p, q = QPolynomial([1, 2]), QPolynomial([0, 1, 1])
    assert (p * q).coeffs == (0, 1, 3, 2)
    assert (p + q).coeffs == (1, 3, 1)
    assert (p - p).is_zero()
    assert p(3) == 7
    assert str(QPolynomial([1, -1, 0, 2])) == "1 - q + 2q^3"
    quot, rem = QPolynomial([-1, 0, 0, 1]).divmod(QPolynomial([-1, 1]))
    assert quot.coeffs == (1, 1, 1) and rem.is_zero()
    with pytest.raises(ValueError):
        p.divmod(QPolynomial([1, 2]))


def test_weight_gen_poly_examples():
    assert weight_gen_poly(A3, 2).coeffs == (1, 1, 2, 2, 2, 1, 1)
    for t in supported_types(5):
        p = weight_gen_poly(t, 0)
        assert (p.as_dict() if isinstance(p, BiQPolynomial) else p.coeffs) in ({(0, 0): 1}, (1,))
    b4 = affine_type("B1", 4)
    direct = {}
    for m in enumerate_level(b4, 5):
        direct[m[-1]] = direct.get(m[-1], 0) + 1
    assert weight_gen_poly(b4, 5).coeffs == tuple(direct.get(k, 0) for k in range(max(direct) + 1))


def test_series_examples():
    e6 = affine_type("E6_1")
    assert series_coefficient(e6, 3) == weight_gen_poly(e6, 3)
    assert series_coefficient(A3, 0) == QPolynomial([1])
    # A-type generating identity: coefficient of t^l in prod 1/(1 - q^i t) is [n+l choose l]
    for n in range(1, 5):
        for level in range(0, 6):
            assert series_coefficient(affine_type("A1", n), level) == q_binomial(n + level, level)


@pytest.mark.parametrize("t", supported_types(8, 7), ids=str)
def test_route_equality_and_total(t):
    for level in range(0, 11):
        p = weight_gen_poly(t, level)
        assert p == series_coefficient(t, level)
        total = p.total() if isinstance(p, BiQPolynomial) else p(1)
        assert total == len(enumerate_level(t, level))


@pytest.mark.parametrize("t", supported_types(7, 6), ids=str)
def test_residues_match_class_sizes(t):
    big_n = datum(t).group_order
    for level in range(1, 8):
        p = weight_gen_poly(t, level)
        parts = classes(t, level)
        if is_bicyclic(t):
            res = reduce_mod_bicyclic(p)
            assert sorted(res.values()) == sorted(len(v) for v in parts.values())
        elif t.family != "A2_even":
            res = reduce_mod_cyclic(p, big_n)
            for rep, members in parts.items():
                assert res[weight_residue(t, rep)] == len(members)


def weight_residue(t, m):
    return s_evaluation(t, m)[0] % datum(t).group_order


def test_reduce_examples():
    assert reduce_mod_cyclic(BINOM_5_2, 4) == (3, 2, 3, 2)
    assert reduce_mod_cyclic(BINOM_5_2, 1) == (10,)
    assert reduce_mod_cyclic(QPolynomial([1]), 5) == (1, 0, 0, 0, 0)
    assert reduce_mod_bicyclic(BiQPolynomial({(0, 0): 1, (1, 3): 2, (2, 1): 5})) == {
        (0, 0): 1, (0, 1): 5, (1, 0): 0, (1, 1): 2}


@pytest.mark.parametrize("d", range(1, 40))
def test_cyclotomic_matches_sympy(d):
    q = sympy.Symbol("q")
    expected = sympy.Poly(sympy.cyclotomic_poly(d, q), q).all_coeffs()[::-1]
    assert list(cyclotomic(d).coeffs) == [int(c) for c in expected]


def test_root_of_unity_examples():
    assert eval_at_primitive_root(BINOM_5_2, 4) == 0
    assert eval_at_primitive_root(BINOM_5_2, 2) == 2
    assert eval_at_primitive_root(BINOM_5_2, 1) == 10
    with pytest.raises(ValueError, match="not an integer"):
        eval_at_primitive_root(QPolynomial([0, 1]), 4)


@settings(max_examples=80, deadline=None)
@given(st.lists(st.integers(-20, 20), max_size=20), st.integers(1, 12))
def test_root_evaluation_agrees_with_floats(coeffs, d):
    p = QPolynomial(coeffs)
    w = cmath.exp(2j * cmath.pi / d)
    value = sum(c * w ** k for k, c in enumerate(p.coeffs))
    try:
        exact = eval_at_primitive_root(p, d)
    except ValueError:
        # a nonconstant remainder mod Phi_d has an irrational value at the root
        assert abs(value - round(value.real)) > 1e-9
        return
    assert abs(value - exact) < 1e-6


def test_bicyclic_sign_evaluation():
    p = BiQPolynomial({(0, 0): 3, (1, 0): 2, (0, 1): 1, (1, 1): 4})
    assert eval_bicyclic_signs(p, 0, 0) == 10
    assert eval_bicyclic_signs(p, 1, 0) == 3 - 2 + 1 - 4
    assert eval_bicyclic_signs(p, 1, 1) == p(-1, -1)
