import pytest
from hypothesis import given, strategies as st

from artin_growth import census, charpoly as cp
from artin_growth.polynomial import X, IntPolynomial


def test_k_script_examples():
    assert cp.k_script(3) == X**3 - 3 * X**2
    assert cp.k_script(0) == IntPolynomial.constant(2)
    assert cp.k_script(6) == X * cp.k_script(5) - X * cp.k_script(4)
    k6 = (X - 2) * (X * X - 4 * X + 2) - (X - 2)
    assert cp.k_reduced(6) == k6
    assert cp.k_script(6) == k6.mul_monomial(3)


def test_a_script_examples():
    assert cp.a_script(1) == X - 1
    assert cp.a_script(0) == IntPolynomial.constant(1)
    assert cp.a_script(2) == X * X - 2 * X


def test_reduced_examples():
    assert cp.k_reduced(3) == X - 3
    assert cp.d_reduced(5) == X**3 - 5 * X**2 + 6 * X - 2
    assert cp.a_reduced(4) == X * X - 4 * X + 3
    assert cp.a_reduced(4).mul_monomial(2) == cp.a_script(4)


def test_closed_form_examples():
    assert cp.k_closed_form(2) == X - 2
    assert cp.k_closed_form(0) == IntPolynomial.constant(2)
    assert cp.k_closed_form(5) == cp.k_reduced(5)


def test_e_script_examples():
    assert cp.e_script(8) == X**4 * (X - 1) * (X**3 - 7 * X**2 + 14 * X - 7)
    assert cp.e_script(6) == X**3 * (X - 1) * cp.k_reduced(5)
    with pytest.raises(ValueError):
        cp.e_script(5)


def test_sp_identity_examples():
    assert cp.sp_identity_check(3)
    assert cp.sp_identity_check(4)
    assert cp.sp_identity_check(25)
    with pytest.raises(ValueError):
        cp.sp_identity_check(2)


def test_boundary_examples():
    assert cp.boundary_values(4) == (2, 2)
    assert cp.boundary_values(1) == (1, 1)
    assert cp.boundary_values(11) == (-11, 1)


@pytest.mark.parametrize("n", range(0, 41))
def test_factorizations_and_degrees(n):
    assert cp.k_script(n) == cp.k_reduced(n).mul_monomial((n + 1) // 2)
    assert cp.a_script(n) == cp.a_reduced(n).mul_monomial(n // 2)
    assert cp.k_reduced(n).degree == n // 2
    assert cp.k_closed_form(n) == cp.k_reduced(n)
    if n >= 3:
        assert cp.d_reduced(n).degree == (n + 2) // 2
        assert cp.d_script(n) == cp.d_reduced(n).mul_monomial((n - 1) // 2)


@pytest.mark.parametrize("n", range(5, 41))
def test_d_step_two_relation(n):
    # the reduced D polynomials obey the same step-2 recurrence as K and A
    if n >= 7:
        assert cp.d_reduced(n) == (X - 2) * cp.d_reduced(n - 2) - cp.d_reduced(n - 4)


def test_bareiss_matches_cofactor_expansion():
    def cofactor(m):
        if len(m) == 1:
            return m[0][0]
        total = IntPolynomial()
        for j in range(len(m)):
            minor = [row[:j] + row[j + 1 :] for row in m[1:]]
            term = m[0][j] * cofactor(minor)
            total = total + term if j % 2 == 0 else total - term
        return total

    for M in (census.k_transition(5), census.d_transition(5), census.e_transition(6)):
        n = len(M)
        rows = [[(X if i == j else IntPolynomial()) - M[i][j] for j in range(n)] for i in range(n)]
        assert cp.det_bareiss(rows) == cofactor(rows)


@pytest.mark.parametrize("n", range(3, 13))
def test_transition_charpolys(n):
    assert cp.charpoly(census.k_transition(n)) == cp.k_script(n)
    assert cp.charpoly(census.a_transition(n)) == cp.a_script(n)
    if n >= 4:
        assert cp.charpoly(census.d_transition(n)) == cp.d_script(n)


@pytest.mark.parametrize("n", (6, 7, 8))
def test_e_transition_charpoly(n):
    assert cp.charpoly(census.e_transition(n)) == cp.e_script(n)


@given(st.lists(st.lists(st.integers(-3, 3), min_size=4, max_size=4), min_size=4, max_size=4))
def test_charpoly_trace_and_det(m):
    p = cp.charpoly(m)
    assert p.is_monic() and p.degree == 4
    assert p[3] == -sum(m[i][i] for i in range(4))
    det0 = cp.det_bareiss([[IntPolynomial.constant(v) for v in row] for row in m])
    assert p[0] == det0[0]
