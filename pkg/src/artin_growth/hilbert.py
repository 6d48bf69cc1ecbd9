"""Rational Hilbert series ``numerator(t) / denominator(t)`` and their coefficient streams."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .charpoly import a_script, k_reduced, k_script
from .coxeter import CoxeterGraph
from .errors import UnsupportedGraph
from .polynomial import ONE, IntPolynomial


@dataclass(frozen=True)
class RationalSeries:
    numerator: IntPolynomial
    denominator: IntPolynomial

    def __post_init__(self):
        if self.denominator[0] == 0:
            raise ValueError("denominator must have a nonzero constant term")

    def coefficients(self, K: int) -> list[int]:
        return coefficients(self, K)

    def to_json(self, K: int | None = None) -> dict:
        out = {"numerator": self.numerator.to_json(), "denominator": self.denominator.to_json()}
        if K is not None:
            out["coefficients"] = coefficients(self, K)
        return out

    def __str__(self) -> str:
        return f"({self.numerator.format('t')}) / ({self.denominator.format('t')})"


def stream(s: RationalSeries) -> Iterator[int]:
    """Power-series coefficients, generated by the denominator's linear recurrence."""
    den = s.denominator.coeffs
    d0 = den[0]
    hist: list[int] = []
    k = 0
    while True:
        acc = s.numerator[k] - sum(den[i] * hist[k - i] for i in range(1, min(k, len(den) - 1) + 1))
        if acc % d0:
            raise ValueError(f"coefficient {k} of {s} is not an integer")
        c = acc // d0
        hist.append(c)
        yield c
        k += 1


def coefficients(s: RationalSeries, K: int) -> list[int]:
    it = stream(s)
    return [next(it) for _ in range(K + 1)]


def series_from_charpoly(p: IntPolynomial) -> RationalSeries:
    """``1 / (t^m P(1/t))`` where ``P`` is ``p`` with its power of λ removed.

    For the characteristic polynomial of a counting recurrence with all
    initial per-start counts 1 this is the Hilbert series.
    """
    if not p.is_monic():
        raise ValueError(f"characteristic polynomial must be monic, got {p}")
    _, reduced = p.strip_zero_roots()
    return RationalSeries(ONE, reduced.reciprocal())


def det_w(n: int) -> IntPolynomial:
    """``t^n K_n(1/t)``, the determinant of the per-start linear system."""
    return k_reduced(n).reciprocal()


def k_series(n: int) -> RationalSeries:
    return series_from_charpoly(k_script(n))


def partial_series_K(n: int, m: int) -> RationalSeries:
    """Series of K-type words starting with ``y_m``, ``2 <= m <= n-1``:
    ``t^{m-1} A_{m-2}(1/t) / det W_n``."""
    if not 2 <= m <= n - 1:
        raise ValueError(f"m must satisfy 2 <= m <= n-1, got m={m}, n={n}")
    a = a_script(m - 2)
    num = IntPolynomial(reversed(a.coeffs)).mul_monomial(1)  # t * t^{m-2} a(1/t)
    return RationalSeries(num, det_w(n))


def sum_identity_check(n: int, K: int) -> bool:
    """``1 + sum_i H_{K;i} = H_K`` to order ``K``, using ``H_1 = H_2`` and ``H_{n-1} = H_n``."""
    partial = {m: coefficients(partial_series_K(n, m), K) for m in range(2, n)}
    partial[1] = partial[2]
    partial[n] = partial[n - 1]
    lhs = [(1 if k == 0 else 0) + sum(partial[m][k] for m in range(1, n + 1)) for k in range(K + 1)]
    return lhs == coefficients(k_series(n), K)


def cliques(g: CoxeterGraph) -> Iterator[tuple[int, ...]]:
    """All cliques (including the empty one) of the commutation graph of ``g``."""
    adj = {i: {j for j in range(1, g.n + 1) if j != i and g.commutes(i, j)} for i in range(1, g.n + 1)}

    def extend(clique: tuple[int, ...], candidates: list[int]) -> Iterator[tuple[int, ...]]:
        yield clique
        for idx, v in enumerate(candidates):
            # only larger vertices, so each clique is produced once
            yield from extend(clique + (v,), [w for w in candidates[idx + 1 :] if w in adj[v]])

    yield from extend((), list(range(1, g.n + 1)))


def mobius_denominator(g: CoxeterGraph) -> IntPolynomial:
    """``sum over commuting cliques S of (-t)^|S|``; its inverse is the Hilbert
    series of the right-angled monoid of ``g``."""
    if not g.is_right_angled():
        raise UnsupportedGraph(f"{g}: Möbius denominator needs a right-angled graph")
    coeffs = [0] * (g.n + 1)
    for c in cliques(g):
        coeffs[len(c)] += (-1) ** len(c)
    return IntPolynomial(coeffs)


def mobius_series(g: CoxeterGraph) -> RationalSeries:
    return RationalSeries(ONE, mobius_denominator(g))


def growth_ratio(s: RationalSeries, K: int) -> Fraction:
    c = coefficients(s, K + 1)
    if c[K] == 0:
        raise ZeroDivisionError(f"coefficient {K} is zero")
    return Fraction(c[K + 1], c[K])
