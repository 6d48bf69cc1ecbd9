import math

import pytest

from artin_growth import census, charpoly as cp, hilbert as hb
from artin_growth.coxeter import Family, FamilyId, build_family, disjoint_union, rightangle
from artin_growth.polynomial import ONE, X, IntPolynomial


def P(*c):
    return IntPolynomial(c)


def test_series_from_charpoly_examples():
    assert hb.series_from_charpoly(cp.k_script(3)) == hb.RationalSeries(ONE, P(1, -3))
    assert hb.series_from_charpoly(cp.k_script(4)) == hb.RationalSeries(ONE, P(1, -4, 2))
    assert hb.series_from_charpoly(X - 1) == hb.RationalSeries(ONE, P(1, -1))
    with pytest.raises(ValueError):
        hb.series_from_charpoly(2 * X - 1)


def test_coefficient_examples():
    assert hb.coefficients(hb.RationalSeries(ONE, P(1, -4, 2)), 5) == [1, 4, 14, 48, 164, 560]
    assert hb.coefficients(hb.RationalSeries(ONE, P(1, -1)), 4) == [1] * 5
    assert hb.coefficients(hb.RationalSeries(ONE, P(1, -1) ** 2), 4) == [1, 2, 3, 4, 5]


def test_denominator_needs_constant_term():
    with pytest.raises(ValueError):
        hb.RationalSeries(ONE, P(0, 1))


def test_partial_series():
    n = 4
    s2 = hb.partial_series_K(n, 2)
    assert s2.numerator == P(0, 1) and s2.denominator == hb.det_w(n)
    for m in (2, 3):
        assert hb.coefficients(hb.partial_series_K(6, m), 3)[1] == 1
    starts = [v.starts[2] for v in census.count_K(4, 5)]
    assert hb.coefficients(hb.partial_series_K(4, 3), 5) == starts
    with pytest.raises(ValueError):
        hb.partial_series_K(4, 4)


def test_sum_identity():
    assert hb.sum_identity_check(4, 5)
    assert hb.sum_identity_check(7, 0)
    assert hb.sum_identity_check(5, 6)
    assert hb.coefficients(hb.k_series(5), 6) == census.totals(census.count_K(5, 6))


def test_mobius_examples():
    assert hb.mobius_denominator(build_family(FamilyId(Family.K_INF, 4))) == P(1, -4, 2)
    assert hb.mobius_denominator(build_family(FamilyId(Family.FREE_ABELIAN, 2))) == P(1, -2, 1)
    e8 = rightangle(build_family(FamilyId(Family.E, 8)))
    den = hb.mobius_denominator(e8)
    assert den == P(1, -1) * P(1, -7, 14, -7)
    assert den == cp.e_script(8).strip_zero_roots()[1].reciprocal()


def test_mobius_product_rule():
    a = rightangle(build_family(FamilyId(Family.A, 3)))
    b = build_family(FamilyId(Family.K_INF, 4))
    assert hb.mobius_denominator(disjoint_union(a, b)) == hb.mobius_denominator(a) * hb.mobius_denominator(b)


@pytest.mark.parametrize("n", range(3, 12))
def test_family_denominators_match_mobius(n):
    assert hb.mobius_denominator(build_family(FamilyId(Family.K_INF, n))) == hb.det_w(n)
    a = rightangle(build_family(FamilyId(Family.A, n)))
    assert hb.mobius_series(a) == hb.series_from_charpoly(cp.a_script(n))
    if n >= 4:
        d = rightangle(build_family(FamilyId(Family.D, n)))
        assert hb.mobius_series(d) == hb.series_from_charpoly(cp.d_script(n))


def test_growth_ratio_examples():
    assert hb.growth_ratio(hb.RationalSeries(ONE, P(1, -3)), 7) == 3
    assert hb.growth_ratio(hb.RationalSeries(ONE, P(1, -1)), 7) == 1
    braid = hb.RationalSeries(ONE, P(1, -2, 0, 1))
    golden = (1 + math.sqrt(5)) / 2
    assert abs(float(hb.growth_ratio(braid, 20)) - golden) < 1e-4


def test_braid_series_matches_brute_force():
    brute = census.count_bruteforce_series(census.braid_presentation(3), 10)
    assert hb.coefficients(hb.RationalSeries(ONE, P(1, -2, 0, 1)), 10) == brute


def test_to_json():
    d = hb.k_series(4).to_json(3)
    assert d == {"numerator": [1], "denominator": [1, -4, 2], "coefficients": [1, 4, 14, 48]}


def test_ratio_bound_holds_eventually():
    # the ratio drops below 4 only after a rank-dependent onset
    from artin_growth.battery import check_ratio, family_series

    ok, detail = check_ratio(40, 800)
    assert ok, detail
    onsets = {name: census.ratio_onset(hb.coefficients(s, 400)) for name, s in family_series(40)}
    assert max(v for k, v in onsets.items() if k in ("Kinf3", "Kinf9", "A11∞", "D10∞", "E8∞", "braids3")) <= 10
    assert onsets["Kinf10"] == 11 and onsets["Kinf40"] > 64
