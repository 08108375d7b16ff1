from fractions import Fraction

import pytest

from lctforge.sparsepoly import (
    SparsePoly,
    Equal,
    Unequal,
    poly_equal,
    weighted_degree_profile,
)


def xyz():
    x = SparsePoly.variable(3, 0)
    y = SparsePoly.variable(3, 1)
    z = SparsePoly.variable(3, 2)
    return x, y, z


def test_zero_coefficients_dropped():
    p = SparsePoly(2, {(1, 0): Fraction(0), (0, 1): Fraction(2)})
    assert p.terms == {(0, 1): Fraction(2)}
    assert not p.is_zero()
    assert SparsePoly.zero(2).is_zero()


def test_addition_cancels_to_zero():
    p = SparsePoly(1, {(1,): 2})
    q = p + SparsePoly(1, {(1,): -2})
    assert q.is_zero()


def test_arithmetic():
    x, y, _ = xyz()
    p = (x + y) * (x - y)
    assert p == x ** 2 - y ** 2
    assert (x + 1) * (x + 1) == x ** 2 + 2 * x + 1
    assert 3 * x == x * 3
    assert (2 - x) + (x - 2) == SparsePoly.zero(3)


def test_pow_square_and_multiply():
    x, y, _ = xyz()
    p = x + 2 * y
    assert p ** 0 == SparsePoly.constant(3, 1)
    assert p ** 1 == p
    assert p ** 3 == p * p * p
    with pytest.raises(ValueError):
        p ** -1


def test_scalar_fractions():
    x, _, _ = xyz()
    p = Fraction(1, 2) * x + Fraction(1, 3)
    assert p.terms[(1, 0, 0)] == Fraction(1, 2)
    assert p.terms[(0, 0, 0)] == Fraction(1, 3)


def test_arity_mismatch():
    with pytest.raises(ValueError):
        SparsePoly.variable(2, 0) + SparsePoly.variable(3, 0)
    with pytest.raises(ValueError):
        poly_equal(SparsePoly.zero(2), SparsePoly.zero(3))


def test_bad_exponents():
    with pytest.raises(ValueError):
        SparsePoly(2, {(1,): 1})
    with pytest.raises(ValueError):
        SparsePoly(2, {(-1, 0): 1})
    with pytest.raises(ValueError):
        SparsePoly(0)


def test_poly_equal_witness_is_leading_difference():
    x, y, _ = xyz()
    lhs = x ** 3 + y
    rhs = x ** 3 + x * y + y
    res = poly_equal(lhs, rhs)
    assert isinstance(res, Unequal)
    assert res.witness == (1, 1, 0)
    assert poly_equal(lhs, lhs) == Equal()


def test_poly_equal_graded_before_lex():
    # difference has terms x*y^2 (degree 3) and x^2 (degree 2); graded
    # lex puts the degree-3 term first even though x^2 wins plain lex
    x, y, _ = xyz()
    res = poly_equal(x * y ** 2 + x ** 2, SparsePoly.zero(3))
    assert res.witness == (1, 2, 0)


def test_weighted_degree_profile():
    x, y, z = xyz()
    p = x ** 6 * y + y ** 2 * z  # weights (11,21,29): 87 and 71
    assert weighted_degree_profile(p, (11, 21, 29)) == {87, 71}
    q = x ** 2 + y  # quasihomogeneous for weights (1, 2, 5)
    assert weighted_degree_profile(q, (1, 2, 5)) == {2}
    with pytest.raises(ValueError):
        weighted_degree_profile(p, (1, 2))


def test_hash_consistent_with_eq():
    x, y, _ = xyz()
    assert hash(x + y) == hash(y + x)
    assert len({x + y, y + x, x - y}) == 2


def test_repr_mentions_terms():
    x, _, _ = xyz()
    assert repr(SparsePoly.zero(3)) == "SparsePoly(0)"
    assert "x0^2" in repr(x ** 2)
