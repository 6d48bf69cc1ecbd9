import pytest

from artin_growth import census, rewrite
from artin_growth.coxeter import Family, FamilyId, build_family, presentation, rightangle
from artin_growth.errors import ChainViolation, GuardExceeded, UnsupportedGraph


def graph(f, n):
    return build_family(FamilyId(f, n))


def test_count_K_examples():
    assert census.totals(census.count_K(3, 4)) == [1, 3, 9, 27, 81]
    assert census.totals(census.count_K(4, 5)) == [1, 4, 14, 48, 164, 560]
    for n in range(3, 8):
        assert census.count_K(n, 1)[1].total == n


@pytest.mark.parametrize(
    "counter,fam,ns",
    [
        (census.count_K, Family.K_INF, range(3, 7)),
        (census.count_A_infty, Family.A, range(1, 7)),
        (census.count_D_infty, Family.D, range(4, 7)),
        (census.count_E, Family.E, (6, 7, 8)),
    ],
)
def test_recurrences_match_canonical_and_brute(counter, fam, ns):
    for n in ns:
        g = graph(fam, n)
        if fam is not Family.K_INF:
            g = rightangle(g)
        rec = census.totals(counter(n, 7))
        assert rec == [rewrite.count_canonical(g, k) for k in range(8)]
        K = 4 if n <= 6 else 3
        assert rec[: K + 1] == census.count_bruteforce_series(presentation(g), K)


def test_per_start_counts_match_canonical_words():
    n, K = 5, 6
    vecs = census.count_K(n, K)
    g = graph(Family.K_INF, n)
    for k in range(1, K + 1):
        by_start = [0] * n
        for w in rewrite.iter_canonical(g, k):
            by_start[w[0] - 1] += 1
        assert tuple(by_start) == vecs[k].starts


def test_e8_small_lengths():
    g = rightangle(graph(Family.E, 8))
    c = census.totals(census.count_E8(2))
    assert c[:2] == [1, 8]
    commuting = sum(1 for i, j, r in g.pairs() if r == 2)
    assert c[2] == census.count_bruteforce(presentation(g), 2) == 64 - commuting


def test_a_infty_two_is_free():
    assert census.totals(census.count_A_infty(2, 8)) == [2**k for k in range(9)]
    g3 = rightangle(graph(Family.A, 3))
    assert census.count_A_infty(3, 3)[3].total == rewrite.enumerate_canonical(g3, 3)


def test_bruteforce_examples():
    braid = census.braid_presentation(3)
    assert census.count_bruteforce(braid, 3) == 7
    assert census.count_bruteforce(braid, 5) == 20
    assert census.count_bruteforce(presentation(graph(Family.FREE_ABELIAN, 2)), 4) == 5


def test_bruteforce_guard(monkeypatch):
    braid = census.braid_presentation(3)
    with pytest.raises(GuardExceeded):
        census.count_bruteforce(braid, 10, guard=100)
    monkeypatch.setenv("ARTIN_GROWTH_GUARD", "50")
    with pytest.raises(GuardExceeded):
        census.count_bruteforce(braid, 6)


def test_fibonacci_convention():
    assert [census.fibonacci(m) for m in range(6)] == [1, 1, 2, 3, 5, 8]
    assert census.fibonacci_check(0)
    assert census.fibonacci_check(5)
    assert census.fibonacci_check(12)


def test_convolve():
    ones = [1] * 10
    assert census.convolve(ones, ones, 6) == [k + 1 for k in range(7)]
    fa2 = census.count_bruteforce_series(presentation(graph(Family.FREE_ABELIAN, 2)), 5)
    assert census.convolve(ones, ones, 5) == fa2
    a1 = census.totals(census.count_A_infty(1, 4))
    assert census.convolve(a1, a1, 4)[4] == 5
    with pytest.raises(ValueError):
        census.convolve([1], ones, 3)


def test_chain():
    t = census.verify_chain(FamilyId(Family.A, 4), 0)
    assert (t.a, t.b, t.c) == (1, 1, 1)
    t = census.verify_chain(FamilyId(Family.A, 4), 4)
    assert t.a <= t.b <= t.c
    with pytest.raises(UnsupportedGraph):
        census.verify_chain(FamilyId(Family.K_INF, 4), 2)
    assert issubclass(ChainViolation, AssertionError)


def test_group_upper_bound():
    assert census.group_upper_bound([3**k for k in range(4)], 2)[2] == 13
    assert census.group_upper_bound([1] * 6, 5) == [k + 1 for k in range(6)]
    braid = census.count_bruteforce_series(census.braid_presentation(3), 5)
    assert census.group_upper_bound(braid, 5)[5] == 46


def test_ratio_helpers():
    assert census.ratio_bound_holds([3**k for k in range(20)])
    assert not census.ratio_bound_holds([5**k for k in range(20)])
    assert census.ratio_onset([1, 5, 10, 20, 40]) == 1


def test_transition_validation():
    with pytest.raises(ValueError):
        census.k_transition(2)
    with pytest.raises(ValueError):
        census.e_transition(9)
