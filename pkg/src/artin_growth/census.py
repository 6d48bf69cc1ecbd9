"""Counting monoid elements by length.

Three independent routes are provided: the start-letter recurrences of the
right-angled families, canonical-word enumeration (see :mod:`.rewrite`),
and brute force over all ``n^k`` words, merging words joined by a single
rule application.  Counts are Python ints throughout.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from typing import Optional, Sequence

from .coxeter import Family, FamilyId, Presentation, build_family, presentation, rightangle
from .errors import ChainViolation, GuardExceeded, UnsupportedGraph

DEFAULT_GUARD = 10**7

Matrix = list[list[int]]


@dataclass(frozen=True)
class CountVector:
    """Counts of elements of length ``k``, split by the first letter of the canonical word."""

    k: int
    starts: tuple[int, ...]
    total: int

    def __post_init__(self):
        if self.k == 0:
            if self.total != 1:
                raise ValueError("exactly one element (the identity) has length 0")
        elif sum(self.starts) != self.total:
            raise ValueError("total must equal the sum of per-start counts")


def totals(vectors: Sequence[CountVector]) -> list[int]:
    return [v.total for v in vectors]


# ---------------------------------------------------------------------------
# recurrences
# ---------------------------------------------------------------------------


def _tail_rows(n: int) -> list[list[int]]:
    # row j: c_{k;j} = sum_{i=j-1}^{n} c_{k-1;i}, lower bound clamped to 1
    return [[1 if i >= max(1, j - 1) else 0 for i in range(1, n + 1)] for j in range(1, n + 1)]


def k_transition(n: int) -> Matrix:
    """Transition matrix of the K-type recurrence (row ``j`` gives ``c_{k;j}``)."""
    if n < 3:
        raise ValueError("K-type monoid needs n >= 3")
    m = _tail_rows(n)
    m[n - 1] = [1 if i >= n - 2 else 0 for i in range(1, n + 1)]
    return m


def a_transition(n: int) -> Matrix:
    if n < 1:
        raise ValueError("A-type monoid needs n >= 1")
    return _tail_rows(n)


def d_transition(n: int) -> Matrix:
    """Row ``n``: ``x_n`` may be followed by ``x_{n-2}`` or ``x_n`` only."""
    if n < 3:
        raise ValueError("D-type monoid needs n >= 3")
    m = _tail_rows(n)
    m[n - 1] = [1 if i in (n - 2, n) else 0 for i in range(1, n + 1)]
    return m


def e_transition(n: int = 8) -> Matrix:
    """Row 5: ``b_{k;5} = b_{k-1;3} + sum_{i>=5} b_{k-1;i}``."""
    if n not in (6, 7, 8):
        raise ValueError("E-type monoid needs n in {6, 7, 8}")
    m = _tail_rows(n)
    m[4] = [1 if (i == 3 or i >= 5) else 0 for i in range(1, n + 1)]
    return m


def count_by_transition(m: Matrix, K: int) -> list[CountVector]:
    n = len(m)
    out = [CountVector(0, (0,) * n, 1)]
    if K < 1:
        return out[: K + 1]
    cur = [1] * n
    out.append(CountVector(1, tuple(cur), n))
    for k in range(2, K + 1):
        cur = [sum(c for c, flag in zip(cur, row) if flag) for row in m]
        out.append(CountVector(k, tuple(cur), sum(cur)))
    return out


def count_K(n: int, K: int) -> list[CountVector]:
    return count_by_transition(k_transition(n), K)


def count_A_infty(n: int, K: int) -> list[CountVector]:
    return count_by_transition(a_transition(n), K)


def count_D_infty(n: int, K: int) -> list[CountVector]:
    return count_by_transition(d_transition(n), K)


def count_E(n: int, K: int) -> list[CountVector]:
    return count_by_transition(e_transition(n), K)


def count_E8(K: int) -> list[CountVector]:
    return count_E(8, K)


# ---------------------------------------------------------------------------
# brute force
# ---------------------------------------------------------------------------


class UnionFind:
    """Disjoint sets over ``0..size-1`` with path halving and union by size."""

    def __init__(self, size: int):
        self.parent = list(range(size))
        self.size = [1] * size
        self.components = size

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        self.components -= 1
        return True


def brute_force_guard() -> int:
    env = os.environ.get("ARTIN_GROWTH_GUARD")
    return int(env) if env else DEFAULT_GUARD


def count_bruteforce(p: Presentation, k: int, guard: Optional[int] = None) -> int:
    """Number of elements of length ``k``: connected components of the graph on
    all ``n^k`` words whose edges are single rule applications."""
    guard = brute_force_guard() if guard is None else guard
    n = p.n
    size = n**k
    if size > guard:
        raise GuardExceeded(f"brute force needs {n}^{k} = {size} words, guard is {guard}")
    if k == 0:
        return 1
    place = [n ** (k - 1 - t) for t in range(k)]
    # (pos, lhs) -> index delta of replacing lhs by rhs at pos
    by_len: dict[int, dict[tuple[int, ...], list[int]]] = {}
    for lhs, rhs in p.rules:
        L = len(lhs)
        if L > k:
            continue
        deltas = [
            sum((b - a) * place[pos + t] for t, (a, b) in enumerate(zip(lhs, rhs)))
            for pos in range(k - L + 1)
        ]
        by_len.setdefault(L, {})[lhs] = deltas
    uf = UnionFind(size)
    for idx, w in enumerate(itertools.product(range(1, n + 1), repeat=k)):
        for L, table in by_len.items():
            for pos in range(k - L + 1):
                deltas = table.get(w[pos : pos + L])
                if deltas is not None:
                    uf.union(idx, idx + deltas[pos])
    return uf.components


def count_bruteforce_series(p: Presentation, K: int, guard: Optional[int] = None) -> list[int]:
    return [count_bruteforce(p, k, guard) for k in range(K + 1)]


def braid_presentation(strands: int = 3) -> Presentation:
    """Positive braids on ``strands`` strands (the A_{strands-1} Artin monoid)."""
    return presentation(build_family(FamilyId(Family.A, strands - 1)))


def fibonacci(m: int) -> int:
    """Fibonacci numbers with ``F_0 = F_1 = 1`` (so ``F_2 = 2``).

    This is the indexing under which the 3-strand positive braid counts
    1, 2, 4, 7, 12, 20, ... equal ``F_{k+2} - 1`` from ``k = 0``.
    """
    a, b = 1, 1
    for _ in range(m):
        a, b = b, a + b
    return a


def fibonacci_check(K: int, guard: Optional[int] = None) -> bool:
    p = braid_presentation(3)
    return all(count_bruteforce(p, k, guard) == fibonacci(k + 2) - 1 for k in range(K + 1))


# ---------------------------------------------------------------------------
# products, chains, and group bounds
# ---------------------------------------------------------------------------


def convolve(m1: Sequence[int], m2: Sequence[int], K: int) -> list[int]:
    """Counts for the direct product: ``p(k) = sum_i m1(i) m2(k-i)``."""
    if len(m1) <= K or len(m2) <= K:
        raise ValueError(f"both sequences must be defined through k={K}")
    return [sum(m1[i] * m2[k - i] for i in range(k + 1)) for k in range(K + 1)]


@dataclass(frozen=True)
class ChainTriple:
    k: int
    a: int
    b: int
    c: int
    upper: str

    def holds(self) -> bool:
        return self.a <= self.b <= self.c


_ARTIN = {Family.A, Family.B, Family.D, Family.E, Family.F4, Family.G2, Family.H, Family.I2}


def upper_counts(fid: FamilyId, K: int) -> tuple[str, list[int]]:
    """Counts of the right-angled monoid that surjects onto (or contains) the
    right-angled companion of ``fid``: K-type for rank >= 3, the E8 monoid for
    E, and the free monoid for rank <= 2."""
    if fid.family is Family.E:
        return "E8∞", totals(count_E8(K))
    if fid.n >= 3:
        return f"Kinf{fid.n}", totals(count_K(fid.n, K))
    return f"free{fid.n}", [fid.n**k for k in range(K + 1)]


def verify_chain(fid: FamilyId, k: int, guard: Optional[int] = None) -> ChainTriple:
    """``a_k`` (Artin monoid, brute force) <= ``b_k`` (right-angled companion,
    brute force) <= ``c_k`` (upper monoid, recurrence)."""
    if fid.family not in _ARTIN:
        raise UnsupportedGraph(f"{fid}: the chain is stated for Artin spherical families")
    g = build_family(fid)
    a = count_bruteforce(presentation(g), k, guard)
    b = count_bruteforce(presentation(rightangle(g)), k, guard)
    upper, cs = upper_counts(fid, k)
    t = ChainTriple(k, a, b, cs[k], upper)
    if not t.holds():
        raise ChainViolation(f"{fid}, k={k}: {a} <= {b} <= {cs[k]} fails")
    return t


def group_upper_bound(m: Sequence[int], K: int) -> list[int]:
    """Upper bound on group elements of length <= k in the generators plus the
    inverse Garside element: the product with a free monoid on one generator."""
    if not m or m[0] != 1:
        raise ValueError("monoid count sequence must start with m(0) = 1")
    return convolve([1] * (K + 1), m, K)


def ratio_bound_holds(counts: Sequence[int], start: int = 10, bound: int = 4) -> bool:
    """``c_{k+1} < bound * c_k`` for every ``start <= k < len(counts) - 1``."""
    return all(counts[k + 1] < bound * counts[k] for k in range(start, len(counts) - 1))


def ratio_onset(counts: Sequence[int], bound: int = 4) -> int:
    """Smallest ``k0`` with ``c_{k+1} < bound * c_k`` for all ``k0 <= k < len(counts) - 1``."""
    k0 = 0
    for k in range(len(counts) - 1):
        if not counts[k + 1] < bound * counts[k]:
            k0 = k + 1
    return k0
