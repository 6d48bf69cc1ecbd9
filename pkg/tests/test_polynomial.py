from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from artin_growth.polynomial import ONE, X, IntPolynomial

polys = st.lists(st.integers(-50, 50), max_size=7).map(IntPolynomial)


def test_ring_spot_check():
    assert (X + 1) ** 2 == X * X + 2 * X + 1


def test_evaluate_root_of_k3():
    p = X**3 - 3 * X**2
    assert p.evaluate(3) == 0
    assert isinstance(p.evaluate(Fraction(1, 2)), Fraction)


def test_divide_by_monomial():
    assert (X**4 - 4 * X**3 + 2 * X**2).div_monomial(2) == X**2 - 4 * X + 2


def test_divide_by_monomial_rejects_non_divisible():
    with pytest.raises(ValueError):
        (X**2 + 1).div_monomial(1)


def test_zero_polynomial_and_degree():
    z = IntPolynomial()
    assert z.degree == -1 and z.is_zero()
    assert IntPolynomial((0, 0, 0)) == z
    assert IntPolynomial((1, 2, 0, 0)).degree == 1


def test_strip_zero_roots_and_reciprocal():
    m, p = (X**3 * (X - 3)).strip_zero_roots()
    assert m == 3 and p == X - 3
    assert (X * X - 4 * X + 2).reciprocal() == IntPolynomial((2, -4, 1)).reciprocal()
    assert (X * X - 4 * X + 2).reciprocal().coeffs == (1, -4, 2)


def test_shift_and_derivative():
    assert (X * X).shift(1) == X * X + 2 * X + 1
    assert (X**3).derivative() == 3 * X * X


def test_exact_division():
    a = (X - 1) * (X * X + 3)
    assert a.divmod_exact(X - 1) == X * X + 3
    with pytest.raises(ValueError):
        a.divmod_exact(X - 2)


def test_format_and_json_roundtrip():
    p = X * X - 4 * X + 2
    assert p.format() == "2 - 4λ + λ^2"
    assert IntPolynomial.from_json(p.to_json()) == p


def test_immutable():
    with pytest.raises(AttributeError):
        ONE.coeffs = (2,)


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a + b) - b == a
    assert a * b == b * a


@given(polys, st.fractions(max_denominator=50).filter(lambda f: abs(f) < 20))
def test_sign_at_matches_exact_evaluation(p, x):
    v = p.evaluate(x)
    assert p.sign_at(x) == (v > 0) - (v < 0)


@given(polys, st.integers(-5, 5), st.integers(-5, 5))
def test_shift_is_composition(p, c, x):
    assert p.shift(c)(x) == p(x + c)
