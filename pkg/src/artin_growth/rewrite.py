"""Length-lexicographic string rewriting over generators ``1 < 2 < ... < n``.

Words are tuples of 1-based generator indices.  Every rule is
length-preserving and strictly decreases the length-lex rank, so reduction
always terminates.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass, field
from typing import Callable, Iterator, Optional, Sequence

from .coxeter import CoxeterGraph, Presentation, Word, length_lex_key, presentation
from .errors import GuardExceeded, UnsupportedGraph

#: Default ceiling on the number of words a canonical-word stream may produce.
DEFAULT_STREAM_CEILING = 10**7


_LETTER = re.compile(r"\s*([a-z]?)(\d+)\s*")


def parse_word(text: str) -> Word:
    """``"2 1 3"``, ``"y2y1y3"`` and ``"x2 x1 x3"`` all give ``(2, 1, 3)``."""
    out = []
    letters = set()
    pos = 0
    while pos < len(text):
        m = _LETTER.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse word {text!r} at position {pos}")
        letters.add(m.group(1))
        if len(letters) > 1:
            raise ValueError(f"mixed generator letters in {text!r}")
        out.append(int(m.group(2)))
        pos = m.end()
    return tuple(out)


def format_word(w: Sequence[int], letter: str = "y") -> str:
    return "".join(f"{letter}{a}" for a in w)


@dataclass(frozen=True)
class RewriteSystem:
    n: int
    rules: tuple[tuple[Word, Word], ...]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        for lhs, rhs in self.rules:
            if len(lhs) != len(rhs) or not lhs:
                raise ValueError(f"rule {lhs} -> {rhs} must be nonempty and length-preserving")
            if not length_lex_key(lhs) > length_lex_key(rhs):
                raise ValueError(f"rule {lhs} -> {rhs} does not decrease length-lex rank")

    @classmethod
    def from_presentation(cls, p: Presentation) -> RewriteSystem:
        return cls(p.n, p.rules, p.name)

    @classmethod
    def from_graph(cls, g: CoxeterGraph) -> RewriteSystem:
        return cls.from_presentation(presentation(g))

    @property
    def max_lhs(self) -> int:
        return max((len(lhs) for lhs, _ in self.rules), default=0)


def redexes(w: Word, rs: RewriteSystem) -> list[tuple[int, int]]:
    """All ``(position, rule index)`` pairs where a rule's lhs occurs in ``w``."""
    out = []
    for pos in range(len(w)):
        for idx, (lhs, _) in enumerate(rs.rules):
            if w[pos : pos + len(lhs)] == lhs:
                out.append((pos, idx))
    return out


def apply_rule(w: Word, pos: int, rule: tuple[Word, Word]) -> Word:
    lhs, rhs = rule
    assert w[pos : pos + len(lhs)] == lhs
    return w[:pos] + rhs + w[pos + len(lhs) :]


def reduce(
    w: Sequence[int],
    rs: RewriteSystem,
    choose: Optional[Callable[[list[tuple[int, int]]], tuple[int, int]]] = None,
) -> Word:
    """Rewrite ``w`` until no rule applies.

    The default strategy rewrites the leftmost redex.  ``choose`` picks one
    of the current ``(position, rule index)`` redexes instead; for a
    complete system the result does not depend on it.
    """
    w = tuple(w)
    if choose is not None:
        while True:
            rx = redexes(w, rs)
            if not rx:
                return w
            pos, idx = choose(rx)
            w = apply_rule(w, pos, rs.rules[idx])

    if not rs.rules:
        return w
    by_first: dict[int, list[tuple[Word, Word]]] = {}
    for rule in rs.rules:
        by_first.setdefault(rule[0][0], []).append(rule)
    back = rs.max_lhs - 1
    pos = 0
    while pos < len(w):
        for lhs, rhs in by_first.get(w[pos], ()):
            if w[pos : pos + len(lhs)] == lhs:
                w = w[:pos] + rhs + w[pos + len(lhs) :]
                pos = max(0, pos - back)
                break
        else:
            pos += 1
    return w


def is_irreducible(w: Sequence[int], rs: RewriteSystem) -> bool:
    return not redexes(tuple(w), rs)


# ---------------------------------------------------------------------------
# completeness
# ---------------------------------------------------------------------------


@dataclass
class CompletenessReport:
    complete: bool
    unresolved: list[Word]
    checked: int

    def __bool__(self) -> bool:
        return self.complete


def critical_pairs(rs: RewriteSystem) -> Iterator[tuple[Word, Word, Word]]:
    """Yield ``(overlap word, resolution 1, resolution 2)`` for every ambiguity."""
    for i, (u, u2) in enumerate(rs.rules):
        for j, (v, v2) in enumerate(rs.rules):
            # proper overlap: suffix of u == prefix of v
            for k in range(1, min(len(u), len(v))):
                if u[-k:] == v[:k]:
                    yield u + v[k:], u2 + v[k:], u[:-k] + v2
            # inclusion: v inside u
            if i != j and len(v) <= len(u):
                for p in range(len(u) - len(v) + 1):
                    if u[p : p + len(v)] == v:
                        yield u, u2, u[:p] + v2 + u[p + len(v) :]


def check_completeness(rs: RewriteSystem, max_overlap_len: Optional[int] = None) -> CompletenessReport:
    """Resolve every overlap ambiguity of length <= ``max_overlap_len``.

    Both one-step rewrites of each overlap word are reduced to irreducible
    words; any mismatch is reported.  No rules are synthesized.
    """
    need = 2 * rs.max_lhs - 1
    if max_overlap_len is None:
        max_overlap_len = need
    if rs.rules and max_overlap_len < need:
        raise ValueError(f"max_overlap_len must be >= {need} for this system")
    unresolved: set[Word] = set()
    checked = 0
    for w, r1, r2 in critical_pairs(rs):
        if len(w) > max_overlap_len:
            continue
        checked += 1
        if reduce(r1, rs) != reduce(r2, rs):
            unresolved.add(w)
    return CompletenessReport(not unresolved, sorted(unresolved, key=length_lex_key), checked)


# ---------------------------------------------------------------------------
# right-angled (trace monoid) canonical words
# ---------------------------------------------------------------------------


def commutation_system_complete(g: CoxeterGraph) -> bool:
    """For a right-angled graph, the commutation rules are complete iff for all
    ``i > j > k`` with ``x_i, x_j`` and ``x_j, x_k`` commuting, ``x_i, x_k`` commute."""
    n = g.n
    for j in range(1, n + 1):
        for i in range(j + 1, n + 1):
            if not g.commutes(i, j):
                continue
            for k in range(1, j):
                if g.commutes(j, k) and not g.commutes(i, k):
                    return False
    return True


def _require_supported(g: CoxeterGraph) -> None:
    if not g.is_right_angled():
        raise UnsupportedGraph(f"{g}: canonical words need a right-angled graph")
    if not commutation_system_complete(g):
        raise UnsupportedGraph(f"{g}: commutation rules are not complete in this vertex order")


def followers(g: CoxeterGraph) -> list[list[int]]:
    """``followers(g)[a]`` lists the letters ``b`` with ``a b`` irreducible, increasing."""
    out: list[list[int]] = [[]]
    for a in range(1, g.n + 1):
        out.append([b for b in range(1, g.n + 1) if b >= a or not g.commutes(a, b)])
    return out


def is_canonical(w: Sequence[int], g: CoxeterGraph) -> bool:
    """True iff ``w`` is irreducible under the commutation rules of ``g``.

    Checked on the run-length form: inside a run ``x_a^e`` nothing can apply,
    so only the junctions between consecutive runs matter.
    """
    _require_supported(g)
    if any(not 1 <= a <= g.n for a in w):
        raise ValueError(f"word {tuple(w)} has letters outside 1..{g.n}")
    runs = run_length(w)
    for (a, _), (b, _) in zip(runs, runs[1:]):
        if b < a and g.commutes(a, b):
            return False
    return True


def run_length(w: Sequence[int]) -> list[tuple[int, int]]:
    runs: list[tuple[int, int]] = []
    for a in w:
        if runs and runs[-1][0] == a:
            runs[-1] = (a, runs[-1][1] + 1)
        else:
            runs.append((a, 1))
    return runs


def k_blocks(w: Sequence[int], n: int) -> Optional[list[list[tuple[int, int]]]]:
    """Split a word of the K-type monoid into descending blocks.

    Each block is ``y_i^{e0} y_{i-1}^{e1} ... y_{i-k}^{ek}`` (after ``y_n`` the next
    letter of a block may also be ``y_{n-2}``), and each block starts above
    the last letter of the previous one.  Returns ``None`` if ``w`` has no
    such decomposition.
    """
    blocks: list[list[tuple[int, int]]] = []
    for a, e in run_length(w):
        if blocks:
            prev = blocks[-1][-1][0]
            if a == prev - 1 or (prev == n and a == n - 2):
                blocks[-1].append((a, e))
                continue
            if a <= prev:
                return None
        blocks.append([(a, e)])
    return blocks


def count_canonical(g: CoxeterGraph, k: int) -> int:
    """Number of irreducible words of length ``k`` (transfer over the last letter)."""
    _require_supported(g)
    if k == 0:
        return 1
    fol = followers(g)
    cur = [0] + [1] * g.n
    for _ in range(k - 1):
        nxt = [0] * (g.n + 1)
        for a in range(1, g.n + 1):
            if cur[a]:
                for b in fol[a]:
                    nxt[b] += cur[a]
        cur = nxt
    return sum(cur)


def enumerate_canonical(g: CoxeterGraph, k: int) -> int:
    """Count of rewrite-irreducible words of length ``k``; see :func:`iter_canonical` to stream them."""
    return count_canonical(g, k)


def stream_ceiling() -> int:
    env = os.environ.get("ARTIN_GROWTH_GUARD")
    return int(env) if env else DEFAULT_STREAM_CEILING


def iter_canonical(g: CoxeterGraph, k: int, ceiling: Optional[int] = None) -> Iterator[Word]:
    """Yield every irreducible word of length ``k`` once, in lexicographic order."""
    ceiling = stream_ceiling() if ceiling is None else ceiling
    projected = count_canonical(g, k)
    if projected > ceiling:
        raise GuardExceeded(f"{projected} canonical words of length {k} exceed ceiling {ceiling}")
    return _dfs(followers(g), g.n, k)


def _dfs(fol: list[list[int]], n: int, k: int) -> Iterator[Word]:
    if k == 0:
        yield ()
        return
    stack: list[int] = []

    def rec(choices: Sequence[int]) -> Iterator[Word]:
        for b in choices:
            stack.append(b)
            if len(stack) == k:
                yield tuple(stack)
            else:
                yield from rec(fol[b])
            stack.pop()

    yield from rec(range(1, n + 1))
