"""Coxeter graphs, the classical families, and the monoid presentations they define.

Vertices are numbered ``1..n``.  A label ``r`` between ``x_i`` and ``x_j``
gives the relation ``x_i x_j x_i ... = x_j x_i x_j ...`` with ``r`` letters on
each side; label 2 is a commutation and :data:`INF` means no relation.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional, Union

Word = tuple[int, ...]


class _Infinity(enum.Enum):
    INF = "inf"

    def __repr__(self) -> str:
        return "INF"

    __str__ = __repr__


#: Label for "no relation".  A sentinel, never a number.
INF = _Infinity.INF

Label = Union[int, _Infinity]


def _check_label(r) -> Label:
    if r is INF:
        return r
    if isinstance(r, bool) or not isinstance(r, int) or r < 2:
        raise ValueError(f"Coxeter label must be an integer >= 2 or INF, got {r!r}")
    return r


@dataclass(frozen=True)
class CoxeterGraph:
    """Symmetric label matrix of a (possibly disconnected) Coxeter diagram.

    ``labels`` is an ``n x n`` tuple of tuples; the diagonal holds ``None``.
    Build instances with :meth:`from_edges` rather than directly.
    """

    n: int
    labels: tuple[tuple[Optional[Label], ...], ...]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("a Coxeter graph needs at least one vertex")
        if len(self.labels) != self.n or any(len(row) != self.n for row in self.labels):
            raise ValueError("label matrix must be n x n")
        for i in range(self.n):
            for j in range(self.n):
                if i == j:
                    continue
                _check_label(self.labels[i][j])
                if self.labels[i][j] != self.labels[j][i]:
                    raise ValueError(f"labels not symmetric at ({i + 1}, {j + 1})")

    @classmethod
    def from_edges(
        cls, n: int, edges: Mapping[tuple[int, int], Label], name: str = ""
    ) -> CoxeterGraph:
        """Graph on ``n`` vertices; unlisted pairs get label 2."""
        m: list[list[Optional[Label]]] = [
            [None if i == j else 2 for j in range(n)] for i in range(n)
        ]
        for (i, j), r in edges.items():
            if not (1 <= i <= n and 1 <= j <= n) or i == j:
                raise ValueError(f"bad edge ({i}, {j}) for n={n}")
            r = _check_label(r)
            m[i - 1][j - 1] = m[j - 1][i - 1] = r
        return cls(n, tuple(tuple(row) for row in m), name)

    def label(self, i: int, j: int) -> Label:
        if i == j:
            raise ValueError("no label on the diagonal")
        return self.labels[i - 1][j - 1]

    def commutes(self, i: int, j: int) -> bool:
        return self.label(i, j) == 2

    def pairs(self) -> Iterable[tuple[int, int, Label]]:
        for i in range(1, self.n + 1):
            for j in range(i + 1, self.n + 1):
                yield i, j, self.labels[i - 1][j - 1]

    def is_right_angled(self) -> bool:
        return all(r == 2 or r is INF for _, _, r in self.pairs())

    def to_text(self) -> str:
        lines = [str(self.n)]
        for i, j, r in self.pairs():
            if r != 2:
                lines.append(f"{i} {j} {'inf' if r is INF else r}")
        return "\n".join(lines) + "\n"

    def __str__(self) -> str:
        return self.name or f"CoxeterGraph(n={self.n})"


def parse_graph(text: str, name: str = "") -> CoxeterGraph:
    """Parse the text format: first line ``n``, then lines ``i j r`` (``r`` int >= 2 or ``inf``)."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ValueError("empty graph description")
    try:
        n = int(lines[0])
    except ValueError:
        raise ValueError(f"first line must be the vertex count, got {lines[0]!r}") from None
    edges: dict[tuple[int, int], Label] = {}
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 3:
            raise ValueError(f"expected 'i j r', got {ln!r}")
        i, j = int(parts[0]), int(parts[1])
        tok = parts[2].lower()
        r: Label = INF if tok in ("inf", "infinity", "∞") else int(tok)
        key = (min(i, j), max(i, j))
        if key in edges:
            raise ValueError(f"pair {key} listed twice")
        edges[key] = r
    return CoxeterGraph.from_edges(n, edges, name)


# ---------------------------------------------------------------------------
# families
# ---------------------------------------------------------------------------


class Family(enum.Enum):
    A = "A"
    B = "B"
    D = "D"
    E = "E"
    F4 = "F4"
    G2 = "G2"
    H = "H"
    I2 = "I2"
    K_INF = "Kinf"
    FREE = "free"
    FREE_ABELIAN = "freeabelian"


@dataclass(frozen=True)
class FamilyId:
    family: Family
    n: int
    p: Optional[int] = None

    def __post_init__(self):
        f, n, p = self.family, self.n, self.p
        if not isinstance(n, int) or n < 1:
            raise ValueError(f"{f.value}: rank must be a positive integer, got {n!r}")
        constraint = {
            Family.A: (n >= 1, "n >= 1"),
            Family.B: (n >= 2, "n >= 2"),
            Family.D: (n >= 4, "n >= 4"),
            Family.E: (n in (6, 7, 8), "n in {6, 7, 8}"),
            Family.F4: (n == 4, "n == 4"),
            Family.G2: (n == 2, "n == 2"),
            Family.H: (n in (3, 4), "n in {3, 4}"),
            Family.I2: (n == 2, "n == 2"),
            Family.K_INF: (n >= 3, "n >= 3"),
            Family.FREE: (True, ""),
            Family.FREE_ABELIAN: (True, ""),
        }[f]
        if not constraint[0]:
            raise ValueError(f"{f.value}: rank constraint {constraint[1]} violated (n={n})")
        if f is Family.I2:
            if p is None or p < 5 or p == 6:
                raise ValueError(f"I2: constraint p >= 5, p != 6 violated (p={p})")
        elif p is not None:
            raise ValueError(f"{f.value}: parameter p only applies to I2")

    def __str__(self) -> str:
        if self.family is Family.I2:
            return f"I2({self.p})"
        if self.family in (Family.F4, Family.G2):
            return self.family.value
        return f"{self.family.value}{self.n}"

    @classmethod
    def parse(cls, name: str, n: Optional[int] = None, p: Optional[int] = None) -> FamilyId:
        """Parse CLI names: ``A``, ``B``, ``D``, ``E``, ``F4``, ``G2``, ``H``, ``I2:p``,
        ``Kinf``, ``free``, ``freeabelian``."""
        key = name.strip()
        if key.lower().startswith("i2"):
            rest = key[2:].lstrip(":")
            if rest:
                p = int(rest)
            return cls(Family.I2, 2, p)
        lookup = {f.value.lower(): f for f in Family}
        f = lookup.get(key.lower())
        if f is None:
            raise ValueError(f"unknown family {name!r}")
        if f is Family.F4:
            n = 4 if n is None else n
        elif f is Family.G2:
            n = 2 if n is None else n
        if n is None:
            raise ValueError(f"family {name!r} needs a rank")
        return cls(f, n)


def _chain(n: int, label: Label = 3) -> dict[tuple[int, int], Label]:
    return {(i, i + 1): label for i in range(1, n)}


def build_family(fid: FamilyId, *, standard_order: bool = False) -> CoxeterGraph:
    """Label matrix of the named diagram (unlabelled edges 3, non-edges 2).

    E graphs use the numbering in which ``x_3`` is the branch vertex and
    ``x_4`` the short leaf attached to it, with the long arm ``x_3 - x_5 - ... - x_n``;
    this order makes the right-angled rewriting system complete.
    ``standard_order=True`` gives the Bourbaki numbering (branch ``x_4``, leaf
    ``x_2``) instead.
    """
    f, n = fid.family, fid.n
    name = str(fid)
    if f is Family.A:
        edges = _chain(n)
    elif f is Family.B:
        edges = _chain(n)
        edges[(n - 1, n)] = 4
    elif f is Family.D:
        edges = _chain(n - 1)
        edges[(n - 2, n)] = 3
    elif f is Family.E:
        if standard_order:
            edges = {(1, 3): 3, (3, 4): 3, (2, 4): 3}
            edges.update({(i, i + 1): 3 for i in range(4, n)})
            name += "(standard order)"
        else:
            edges = {(1, 2): 3, (2, 3): 3, (3, 4): 3, (3, 5): 3}
            edges.update({(i, i + 1): 3 for i in range(5, n)})
    elif f is Family.F4:
        edges = {(1, 2): 3, (2, 3): 4, (3, 4): 3}
    elif f is Family.G2:
        edges = {(1, 2): 6}
    elif f is Family.H:
        edges = _chain(n)
        edges[(1, 2)] = 5
    elif f is Family.I2:
        edges = {(1, 2): fid.p}
    elif f is Family.K_INF:
        edges = _chain(n - 1, INF)  # y_1 - ... - y_{n-2} - y_{n-1}
        edges[(n - 2, n)] = INF
        edges[(n - 1, n)] = INF
    elif f is Family.FREE:
        edges = {(i, j): INF for i in range(1, n + 1) for j in range(i + 1, n + 1)}
    elif f is Family.FREE_ABELIAN:
        edges = {}
    else:  # pragma: no cover
        raise ValueError(f"unknown family {f}")
    return CoxeterGraph.from_edges(n, edges, name)


def rightangle(g: CoxeterGraph) -> CoxeterGraph:
    """Replace every label >= 3 by INF; idempotent."""
    labels = tuple(
        tuple(r if (r is None or r == 2 or r is INF) else INF for r in row) for row in g.labels
    )
    name = g.name
    if name and not name.endswith("∞"):
        name += "∞"
    return CoxeterGraph(g.n, labels, name)


def disjoint_union(*graphs: CoxeterGraph) -> CoxeterGraph:
    """Block-diagonal union; the monoid of the result is the direct product."""
    n = sum(g.n for g in graphs)
    edges: dict[tuple[int, int], Label] = {}
    off = 0
    for g in graphs:
        for i, j, r in g.pairs():
            if r != 2:
                edges[(i + off, j + off)] = r
        off += g.n
    return CoxeterGraph.from_edges(n, edges, " ⊔ ".join(str(g) for g in graphs))


# ---------------------------------------------------------------------------
# presentations
# ---------------------------------------------------------------------------


def length_lex_key(w: Word) -> tuple[int, Word]:
    return (len(w), w)


@dataclass(frozen=True)
class Presentation:
    """Generators ``x_1 < ... < x_n`` and length-preserving rules ``lhs -> rhs``
    with ``lhs`` larger than ``rhs`` in length-lexicographic order."""

    n: int
    rules: tuple[tuple[Word, Word], ...]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        for lhs, rhs in self.rules:
            if len(lhs) != len(rhs):
                raise ValueError(f"rule {lhs} -> {rhs} is not length-preserving")
            if not length_lex_key(lhs) > length_lex_key(rhs):
                raise ValueError(f"rule {lhs} -> {rhs} is not length-lex decreasing")
            if any(not 1 <= a <= self.n for a in lhs + rhs):
                raise ValueError(f"rule {lhs} -> {rhs} uses a letter outside 1..{self.n}")


def alternating(i: int, j: int, r: int) -> Word:
    return tuple(i if k % 2 == 0 else j for k in range(r))


def presentation(g: CoxeterGraph) -> Presentation:
    """One rule per pair with a finite label, oriented so lhs > rhs."""
    rules = []
    for i, j, r in g.pairs():
        if r is INF:
            continue
        u, v = alternating(i, j, r), alternating(j, i, r)
        lhs, rhs = (u, v) if u > v else (v, u)
        rules.append((lhs, rhs))
    return Presentation(g.n, tuple(rules), str(g))
