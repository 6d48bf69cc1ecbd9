"""Characteristic polynomials of the counting recurrences and their identities.

Script names carry the full determinant (``k_script(n)`` is the
characteristic polynomial of the K-type recurrence), reduced names have the
power of λ factored out:

    k_script(n) = λ^⌊(n+1)/2⌋ k_reduced(n)
    a_script(n) = λ^⌊n/2⌋     a_reduced(n)
    d_script(n) = λ^⌊(n-1)/2⌋ d_reduced(n)
    e_script(n) = λ^⌊n/2⌋ (λ-1) k_reduced(n-1)
"""

from __future__ import annotations

from functools import lru_cache
from math import comb
from typing import Sequence

from .polynomial import ONE, X, IntPolynomial

LAM = X
SHIFT = X - 2  # λ - 2, the step-2 recurrence multiplier
Q = X * X - 4 * X  # λ² - 4λ


def _step1(prev2: IntPolynomial, prev1: IntPolynomial) -> IntPolynomial:
    return LAM * prev1 - LAM * prev2


@lru_cache(maxsize=None)
def k_script(n: int) -> IntPolynomial:
    """``K_n(λ) = λ K_{n-1} - λ K_{n-2}`` with ``K_0 = 2``, ``K_1 = λ``."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return IntPolynomial.constant(2)
    if n == 1:
        return LAM
    return _step1(k_script(n - 2), k_script(n - 1))


@lru_cache(maxsize=None)
def a_script(n: int) -> IntPolynomial:
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return ONE
    if n == 1:
        return LAM - 1
    return _step1(a_script(n - 2), a_script(n - 1))


_D3 = IntPolynomial((1, -3, 1))
_D4 = IntPolynomial((-1, 3, -4, 1))


@lru_cache(maxsize=None)
def d_script(n: int) -> IntPolynomial:
    """Determinant for the D-type monoid, by the step-1 recurrence from the
    seeds ``λ D_3`` and ``λ D_4``."""
    if n < 3:
        raise ValueError("D family starts at n = 3")
    if n == 3:
        return LAM * _D3
    if n == 4:
        return LAM * _D4
    return _step1(d_script(n - 2), d_script(n - 1))


def _step2(seeds: dict[int, IntPolynomial], n: int, cache: dict[int, IntPolynomial]) -> IntPolynomial:
    if n in seeds:
        return seeds[n]
    if n in cache:
        return cache[n]
    lo = min(seeds)
    if n < lo:
        raise ValueError(f"index {n} below the first seed {lo}")
    val = SHIFT * _step2(seeds, n - 2, cache) - _step2(seeds, n - 4, cache)
    cache[n] = val
    return val


_K_SEEDS = {0: IntPolynomial.constant(2), 1: ONE, 2: X - 2, 3: X - 3}
_A_SEEDS = {-1: ONE, 0: ONE, 1: X - 1, 2: X - 2}
_K_CACHE: dict[int, IntPolynomial] = {}
_A_CACHE: dict[int, IntPolynomial] = {}


def k_reduced(n: int) -> IntPolynomial:
    """Step-2 recurrence ``K_{m+2} = (λ-2) K_m - K_{m-2}``; degree ``⌊n/2⌋``."""
    if n < 0:
        raise ValueError("k_reduced needs n >= 0")
    return _step2(_K_SEEDS, n, _K_CACHE)


def a_reduced(n: int) -> IntPolynomial:
    """Seeds ``A_{-1} = A_0 = 1``, ``A_1 = λ-1``, ``A_2 = λ-2``; degree ``⌊(n+1)/2⌋``."""
    if n < -1:
        raise ValueError("a_reduced needs n >= -1")
    return _step2(_A_SEEDS, n, _A_CACHE)


def d_reduced(n: int) -> IntPolynomial:
    """``d_script(n) / λ^⌊(n-1)/2⌋``; degree ``⌊(n+2)/2⌋``."""
    if n < 3:
        raise ValueError("d_reduced needs n >= 3")
    return d_script(n).div_monomial((n - 1) // 2)


def k_closed_form(n: int) -> IntPolynomial:
    """Binomial expansion in ``λ-2`` and ``q = λ²-4λ``, divided by a power of 2 at the end."""
    if n < 0:
        raise ValueError("n must be >= 0")
    p, odd = divmod(n, 2)
    even_sum = IntPolynomial()
    for i in range(p // 2 + 1):
        even_sum += comb(p, 2 * i) * (SHIFT ** (p - 2 * i)) * (Q**i)
    if not odd:
        # K_{2p} = 2^{1-p} * even_sum
        num, den_pow = even_sum.scale(2), p
    else:
        odd_sum = IntPolynomial()
        for i in range((p - 1) // 2 + 1):
            odd_sum += comb(p, 2 * i + 1) * (SHIFT ** (p - 2 * i - 1)) * (Q**i)
        num, den_pow = even_sum + (X - 4) * odd_sum, p
    den = 2**den_pow
    if any(c % den for c in num):
        raise ArithmeticError(f"closed form for n={n} is not integral")
    return IntPolynomial(c // den for c in num)


def e_script(n: int) -> IntPolynomial:
    """``λ^⌊n/2⌋ (λ-1) K_{n-1}``."""
    if n < 6:
        raise ValueError("E family starts at n = 6")
    return ((X - 1) * k_reduced(n - 1)).mul_monomial(n // 2)


def e_reduced(n: int) -> IntPolynomial:
    return (X - 1) * k_reduced(n - 1)


def sp_identity_check(n: int) -> bool:
    """``K_n = λ A_{n-1} - λ² A_{n-3}`` (script polynomials), exactly."""
    if n < 3:
        raise ValueError("identity is stated for n >= 3")
    return k_script(n) == LAM * a_script(n - 1) - LAM * LAM * a_script(n - 3)


def boundary_values(n: int) -> tuple[int, int]:
    """Exact values of ``k_reduced(n)`` at 0 and 4."""
    p = k_reduced(n)
    return p(0), p(4)


def expected_boundary_values(n: int) -> tuple[int, int]:
    """Closed forms: ``K_{2p}(0) = 2(-1)^p``, ``K_{2p+1}(0) = (-1)^p (2p+1)``,
    ``K_{2p}(4) = 2``, ``K_{2p+1}(4) = 1``."""
    p, odd = divmod(n, 2)
    sign = -1 if p % 2 else 1
    return (sign * (2 * p + 1), 1) if odd else (2 * sign, 2)


# ---------------------------------------------------------------------------
# determinants
# ---------------------------------------------------------------------------


def det_bareiss(m: Sequence[Sequence[IntPolynomial]]) -> IntPolynomial:
    """Determinant of a square matrix over Z[λ] by fraction-free elimination."""
    a = [list(row) for row in m]
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("matrix must be square")
    if n == 0:
        return ONE
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if a[k][k].is_zero():
            for r in range(k + 1, n):
                if not a[r][k].is_zero():
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return IntPolynomial()
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]).divmod_exact(prev)
        prev = a[k][k]
    return a[n - 1][n - 1].scale(sign)


def charpoly(m: Sequence[Sequence[int]]) -> IntPolynomial:
    """``det(λI - M)`` for an integer matrix."""
    n = len(m)
    rows = [
        [(LAM if i == j else IntPolynomial()) - m[i][j] for j in range(n)] for i in range(n)
    ]
    return det_bareiss(rows)
