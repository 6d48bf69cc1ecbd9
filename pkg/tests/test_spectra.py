import math
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from artin_growth import charpoly as cp, spectra as sp
from artin_growth.coxeter import Family, FamilyId
from artin_growth.errors import CertificationError, InconclusiveError
from artin_growth.polynomial import X, IntPolynomial


def P(*c):
    return IntPolynomial(c)


def all_roots(p):
    """High-precision oracle: every complex root of ``p`` (Durand-Kerner in mpmath)."""
    with mpmath.workdps(60):
        return mpmath.polyroots(list(reversed(p.coeffs)), maxsteps=500, extraprec=400)


def real_roots(p):
    return sorted(float(mpmath.re(z)) for z in all_roots(p) if abs(mpmath.im(z)) < 1e-30)


def test_sturm_count_examples():
    assert sp.sturm_count(X * X - 4 * X + 2, 0, 4) == 2
    assert sp.sturm_count(X - 3, 0, 4) == 1
    assert sp.sturm_count(X * X + 1, -10, 10) == 0


def test_isolate_k4():
    cert = sp.isolate(cp.k_script(4), 0, 4, Fraction(1, 2**20))
    assert cert.zero_multiplicity == 2
    assert len(cert.intervals) == 2
    for iv, r in zip(cert.intervals, (2 - math.sqrt(2), 2 + math.sqrt(2))):
        assert iv.lo <= Fraction(r) <= iv.hi and iv.width <= Fraction(1, 2**20)
    assert cert.verify()


def test_isolate_monomial():
    cert = sp.isolate(X**5, -1, 1)
    assert cert.zero_multiplicity == 5 and cert.intervals == [] and cert.verify()


def test_isolate_e8():
    cert = sp.isolate(cp.e_script(8), 0, 4, Fraction(1, 1000))
    assert cert.zero_multiplicity == 4
    got = cert.roots()
    for g, t in zip(got, (0.75, 1.0, 2.44, 3.80)):
        assert abs(g - t) <= 0.01
    assert cert.intervals[1].exact  # λ = 1 lands on a dyadic point
    assert cert.verify()


def test_tampered_certificate_fails():
    cert = sp.isolate(X * X - 4 * X + 2, 0, 4, Fraction(1, 64))
    bad = sp.RootCertificate(
        cert.polynomial, cert.zero_multiplicity, [sp.Interval(Fraction(0), Fraction(1, 4)), cert.intervals[1]],
        cert.uncertified_count, cert.lo, cert.hi, cert.squarefree, cert.chain_length,
    )
    assert not bad.verify()


def test_verify_in_interval_examples():
    assert sp.verify_in_interval(cp.k_reduced(9), 0, 4)
    assert not sp.verify_in_interval(cp.d_reduced(4), 0, 4)
    assert sp.verify_in_interval(cp.d_reduced(5), 0, 4)
    assert not sp.verify_in_interval(X - 5, 0, 4)
    assert not sp.verify_in_interval(X**2 * (X - 1), 0, 4)
    assert sp.verify_in_interval(X**2 * (X - 1), 0, 4, strip_zero=True)


def test_boundary_signs():
    assert sp.check_boundary_signs(sp.k_ladder(0), 25)
    assert sp.check_boundary_signs(sp.k_ladder(1), 25)
    cheb = sp.ChebyshevFamily.from_polys(2, 0, P(1), P(0, 1), -1, 1)
    assert sp.check_boundary_signs(cheb, 5)
    t = cheb.members(5)
    assert t[5] == 16 * X**5 - 20 * X**3 + 5 * X
    assert all(sp.verify_in_interval(q, -1, 1) for q in t[1:])
    # the ladder reproduces the K polynomials
    assert sp.k_ladder(1).members(6) == [cp.k_reduced(2 * i + 1) for i in range(7)]


def test_interlacing_examples():
    assert sp.verify_interlacing(cp.k_reduced(2), cp.k_reduced(4), 0, 4)
    assert sp.verify_interlacing(P(1), X - 2, 0, 4)
    assert sp.verify_interlacing(cp.k_reduced(9), cp.k_reduced(11), 0, 4)
    # same degrees swapped: not interlacing in the required direction
    assert not sp.verify_interlacing(X - 1, (X - 2) * (X - 3), 0, 4)
    with pytest.raises(CertificationError):
        sp.verify_interlacing(X - 1, X * X + 1, 0, 4)


def test_interlacing_needs_retries():
    # q has roots 1 and 1 + 2^-45, p has root 1 + 2^-46 between them
    q = (X - 1) * P(-(2**45 + 1), 2**45)
    p = P(-(2**46 + 1), 2**46)
    with pytest.raises(InconclusiveError):
        sp.verify_interlacing(p, q, 0, 4, width=Fraction(1, 2**40), retries=0)
    assert sp.verify_interlacing(p, q, 0, 4, width=Fraction(1, 2**40))
    # moving p's root outside breaks interlacing
    assert not sp.verify_interlacing(P(-(2**44 + 3), 2**44), q, 0, 4)


def test_dominant_root_examples():
    assert sp.dominant_root(cp.k_reduced(3)) == sp.Interval(Fraction(3), Fraction(3))
    iv = sp.dominant_root(cp.k_reduced(4))
    assert iv.lo < Fraction(2 + math.sqrt(2)) < iv.hi or abs(float(iv) - (2 + math.sqrt(2))) < 1e-11
    assert abs(float(sp.dominant_root(cp.k_reduced(7))) - 3.80) < 0.01
    with pytest.raises(CertificationError):
        sp.dominant_root(cp.d_reduced(4))


def test_growth_bound_examples():
    assert sp.growth_bound(FamilyId(Family.K_INF, 3)).gamma == 3
    two = sp.growth_bound([FamilyId(Family.K_INF, 3), FamilyId(Family.K_INF, 3)])
    assert two.gamma == 3 and len(two.components) == 2
    g40 = sp.growth_bound(FamilyId(Family.K_INF, 40)).gamma
    assert Fraction(399, 100) < g40 < 4
    assert sp.growth_bound(FamilyId(Family.FREE_ABELIAN, 3)).gamma == 1
    with pytest.raises(CertificationError):
        sp.growth_bound(FamilyId(Family.FREE, 5))


@pytest.mark.parametrize("n", range(4, 41))
def test_d_bounds_both_routes(n):
    gb = sp.growth_bound(FamilyId(Family.D, n))
    comp = gb.components[0]
    assert gb.gamma < 4
    assert set(comp.attempts) == {"D-direct", "K-surjection"}
    # the direct route bound really dominates every root modulus
    direct = sp.spectral_radius_bound(cp.d_reduced(n))
    with mpmath.workdps(60):
        top = max(abs(z) for z in all_roots(cp.d_reduced(n)))
        assert top <= mpmath.mpf(direct.bound.numerator) / direct.bound.denominator


@pytest.mark.parametrize("n", range(3, 41))
def test_d_has_at_most_one_conjugate_pair(n):
    f = cp.d_reduced(n)
    real = sp.sturm_count(f, -sp.dyadic_radius(f), sp.dyadic_radius(f))
    assert f.degree - real in (0, 2)


def k_roots_trig(n):
    """Nonzero roots of the reduced K polynomials, ``2 + 2 cos((2j-1) pi / n)``."""
    return sorted(2 + 2 * math.cos((2 * j - 1) * math.pi / n) for j in range(1, n // 2 + 1))


def test_trig_oracle_agrees_with_numpy_for_small_degree():
    for n in range(2, 12):
        assert all(abs(a - b) < 1e-12 for a, b in zip(k_roots_trig(n), real_roots(cp.k_reduced(n))))
        assert len(real_roots(cp.k_reduced(n))) == n // 2


@pytest.mark.parametrize("n", range(2, 41))
def test_k_roots_against_trig_oracle(n):
    cert = sp.isolate(cp.k_reduced(n), 0, 4, Fraction(1, 2**40))
    oracle = k_roots_trig(n)
    assert len(cert.intervals) == len(oracle) == n // 2
    for iv, r in zip(cert.intervals, oracle):
        assert float(iv.lo) - 1e-12 <= r <= float(iv.hi) + 1e-12


@given(st.lists(st.integers(-6, 6), min_size=1, max_size=5, unique=True))
@settings(max_examples=60, deadline=None)
def test_isolation_of_integer_roots(rs):
    p = IntPolynomial.from_roots(rs)
    cert = sp.isolate(p, -7, 7, Fraction(1, 256))
    nonzero = sorted(r for r in rs if r != 0)
    assert cert.zero_multiplicity == (0 in rs)
    assert len(cert.intervals) == len(nonzero)
    for iv, r in zip(cert.intervals, nonzero):
        assert iv.lo <= r <= iv.hi
    assert cert.verify()


def test_cauchy_bounds():
    p = (X - 3) * (X + 5) * (X - 1)
    assert sp.cauchy_bound(p) >= 5
    assert 0 < sp.cauchy_lower_bound(p) <= 1


def test_certificate_json_is_exact():
    d = sp.isolate(cp.k_reduced(5), 0, 4, Fraction(1, 1024)).to_json()
    assert d["polynomial"] == [5, -5, 1]
    assert all(isinstance(v, int) for iv in d["intervals"] for pair in iv.values() for v in pair)
