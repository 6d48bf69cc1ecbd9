"""Certified real-root analysis with Sturm sequences and exact rational arithmetic.

Isolation bisects at dyadic midpoints and evaluates signs with integer
arithmetic only (see :meth:`IntPolynomial.sign_at`), so every interval in a
:class:`RootCertificate` can be re-checked independently.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt
from typing import Optional, Sequence, Union

from .charpoly import a_reduced, d_reduced, e_reduced, k_reduced
from .coxeter import Family, FamilyId
from .errors import CertificationError, InconclusiveError
from .polynomial import IntPolynomial

Rational = Union[int, Fraction]

DEFAULT_WIDTH = Fraction(1, 2**40)
MAX_RETRIES = 8


# ---------------------------------------------------------------------------
# exact gcd and Sturm chains
# ---------------------------------------------------------------------------


def _primitive(cs: Sequence[Fraction]) -> IntPolynomial:
    """Positive rational multiple of ``cs`` with coprime integer coefficients."""
    cs = list(cs)
    while cs and cs[-1] == 0:
        cs.pop()
    if not cs:
        return IntPolynomial()
    den = 1
    for c in cs:
        den = den * c.denominator // _gcd(den, c.denominator)
    ints = [int(c * den) for c in cs]
    g = 0
    for c in ints:
        g = _gcd(g, c)
    return IntPolynomial(c // g for c in ints)


def _gcd(a: int, b: int) -> int:
    a, b = abs(a), abs(b)
    while b:
        a, b = b, a % b
    return a


def _rem(f: Sequence[Fraction], g: Sequence[Fraction]) -> list[Fraction]:
    r = list(f)
    dg = len(g) - 1
    lead = g[-1]
    while len(r) - 1 >= dg and any(r):
        q = r[-1] / lead
        shift = len(r) - 1 - dg
        for i, c in enumerate(g):
            r[shift + i] -= q * c
        r.pop()
        while r and r[-1] == 0:
            r.pop()
    return r


def poly_gcd(f: IntPolynomial, g: IntPolynomial) -> IntPolynomial:
    """Primitive gcd with positive leading coefficient."""
    a = [Fraction(c) for c in f]
    b = [Fraction(c) for c in g]
    while b:
        a, b = b, _rem(a, b)
    out = _primitive(a)
    return -out if out.lead < 0 else out


def squarefree_part(p: IntPolynomial) -> IntPolynomial:
    if p.is_zero():
        raise ValueError("zero polynomial")
    if p.degree == 0:
        return IntPolynomial.constant(1 if p.lead > 0 else -1)
    g = poly_gcd(p, p.derivative())
    return p.divmod_exact(g)


def sturm_chain(f: IntPolynomial) -> list[IntPolynomial]:
    """Sturm sequence ``f, f', -rem(f, f'), ...``, each term rescaled by a positive constant."""
    chain = [f]
    if f.degree < 1:
        return chain
    chain.append(f.derivative())
    while True:
        r = _rem([Fraction(c) for c in chain[-2]], [Fraction(c) for c in chain[-1]])
        if not r:
            return chain
        chain.append(-_primitive(r))


def sign_variations(chain: Sequence[IntPolynomial], x: Rational) -> int:
    signs = [s for s in (p.sign_at(x) for p in chain) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_count(p: IntPolynomial, lo: Rational, hi: Rational) -> int:
    """Number of distinct real roots of ``p`` in ``(lo, hi]``."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    chain = sturm_chain(squarefree_part(p))
    return sign_variations(chain, lo) - sign_variations(chain, hi)


def cauchy_bound(p: IntPolynomial) -> Fraction:
    """Every root ``z`` satisfies ``|z| < 1 + max |c_i / c_d|``."""
    d = p.degree
    if d < 1:
        return Fraction(1)
    return 1 + max(Fraction(abs(c), abs(p.lead)) for c in p.coeffs[:-1])


def cauchy_lower_bound(p: IntPolynomial) -> Fraction:
    """Every nonzero root ``z`` of ``p`` (with ``p(0) != 0``) has ``|z| > |c_0| / (|c_0| + max_{i>=1} |c_i|)``."""
    c0 = abs(p[0])
    if c0 == 0:
        raise ValueError("polynomial vanishes at 0")
    return Fraction(c0, c0 + max(abs(c) for c in p.coeffs[1:]))


def dyadic_radius(p: IntPolynomial) -> Fraction:
    """A power of two strictly above :func:`cauchy_bound`."""
    b, r = cauchy_bound(p), Fraction(1)
    while r <= b:
        r *= 2
    return r


# ---------------------------------------------------------------------------
# certificates
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Interval:
    """Open interval ``(lo, hi)`` with a sign change, or the exact point ``lo == hi``."""

    lo: Fraction
    hi: Fraction

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def to_json(self) -> dict:
        return {
            "lo": [self.lo.numerator, self.lo.denominator],
            "hi": [self.hi.numerator, self.hi.denominator],
        }

    def __float__(self) -> float:
        return float(self.mid)


@dataclass
class RootCertificate:
    polynomial: IntPolynomial
    zero_multiplicity: int
    intervals: list[Interval]
    uncertified_count: int
    lo: Fraction
    hi: Fraction
    squarefree: bool
    chain_length: int
    squarefree_poly: IntPolynomial = field(repr=False, default=None)

    def verify(self) -> bool:
        """Re-check the certificate from scratch: disjoint sorted intervals inside
        ``(lo, hi)``, each an exact root or a single Sturm-counted sign change."""
        f = squarefree_part(self.polynomial.strip_zero_roots()[1])
        if self.zero_multiplicity != self.polynomial.zero_multiplicity():
            return False
        if self.zero_multiplicity + len(self.intervals) + self.uncertified_count != self.polynomial.degree:
            return False
        prev: Optional[Interval] = None
        for iv in self.intervals:
            if not (self.lo <= iv.lo <= iv.hi <= self.hi):
                return False
            if prev is not None and not _disjoint(prev, iv):
                return False
            if iv.exact:
                if f.sign_at(iv.lo) != 0:
                    return False
            else:
                if f.sign_at(iv.lo) * f.sign_at(iv.hi) >= 0:
                    return False
                if sturm_count(f, iv.lo, iv.hi) != 1:
                    return False
            prev = iv
        return True

    def roots(self) -> list[float]:
        return [float(iv) for iv in self.intervals]

    def to_json(self) -> dict:
        return {
            "polynomial": self.polynomial.to_json(),
            "zero_multiplicity": self.zero_multiplicity,
            "interval": {"lo": [self.lo.numerator, self.lo.denominator], "hi": [self.hi.numerator, self.hi.denominator]},
            "intervals": [iv.to_json() for iv in self.intervals],
            "uncertified_count": self.uncertified_count,
            "squarefree": self.squarefree,
            "sturm_chain_length": self.chain_length,
        }


def _disjoint(a: Interval, b: Interval) -> bool:
    """``a`` lies strictly left of ``b``; open intervals may share an endpoint."""
    if a.hi < b.lo:
        return True
    return a.hi == b.lo and not (a.exact and b.exact)


def isolate(
    p: IntPolynomial,
    lo: Rational,
    hi: Rational,
    width: Rational = DEFAULT_WIDTH,
) -> RootCertificate:
    """Isolate the distinct nonzero real roots of ``p`` in the open interval ``(lo, hi)``.

    The power of λ is factored out first and reported as ``zero_multiplicity``.
    Each returned interval has width <= ``width``.
    """
    if p.is_zero():
        raise ValueError("zero polynomial")
    lo, hi, width = Fraction(lo), Fraction(hi), Fraction(width)
    if not lo < hi:
        raise ValueError("need lo < hi")
    if width <= 0:
        raise ValueError("width must be positive")
    z, p0 = p.strip_zero_roots()
    f = squarefree_part(p0)
    chain = sturm_chain(f)
    V = lambda x: sign_variations(chain, x)  # noqa: E731
    sign = f.sign_at

    found: list[Interval] = []
    v_lo, v_hi = V(lo), V(hi)
    stack = [(lo, hi, v_lo, v_hi, v_lo - v_hi - (sign(hi) == 0))]
    while stack:
        a, b, va, vb, c = stack.pop()
        if c == 0:
            continue
        sa, sb = sign(a), sign(b)
        if c == 1 and sa * sb < 0:
            found.append(_refine(f, a, b, sa, width))
            continue
        m = (a + b) / 2
        vm, sm = V(m), sign(m)
        if sm == 0:
            found.append(Interval(m, m))
        stack.append((a, m, va, vm, va - vm - (sm == 0)))
        stack.append((m, b, vm, vb, vm - vb - (sb == 0)))
    found.sort(key=lambda iv: (iv.lo, iv.hi))
    return RootCertificate(
        polynomial=p,
        zero_multiplicity=z,
        intervals=found,
        uncertified_count=p.degree - z - len(found),
        lo=lo,
        hi=hi,
        squarefree=(f.degree == p0.degree),
        chain_length=len(chain),
        squarefree_poly=f,
    )


def _refine(f: IntPolynomial, a: Fraction, b: Fraction, sa: int, width: Fraction) -> Interval:
    while b - a > width:
        m = (a + b) / 2
        sm = f.sign_at(m)
        if sm == 0:
            return Interval(m, m)
        if sm == sa:
            a = m
        else:
            b = m
    return Interval(a, b)


@dataclass
class IntervalCheck:
    ok: bool
    certificate: RootCertificate
    real_roots: int
    distinct_roots: int

    def __bool__(self) -> bool:
        return self.ok


def verify_in_interval(
    p: IntPolynomial,
    a: Rational,
    b: Rational,
    *,
    strip_zero: bool = False,
    width: Rational = DEFAULT_WIDTH,
) -> IntervalCheck:
    """True iff every root of ``p`` is real and lies in ``(a, b)``.

    With ``strip_zero`` the exact power of λ is set aside first (those roots
    are certified at 0 and exempt from the interval test).
    """
    z, p0 = p.strip_zero_roots()
    target = p0 if strip_zero else p
    f = squarefree_part(target)
    R = dyadic_radius(f)
    chain = sturm_chain(f)
    real_total = sign_variations(chain, -R) - sign_variations(chain, R)
    inside = sign_variations(chain, a) - sign_variations(chain, b) - (f.sign_at(b) == 0)
    ok = real_total == f.degree and inside == f.degree
    return IntervalCheck(ok, isolate(p, a, b, width), real_total, f.degree)


# ---------------------------------------------------------------------------
# Chebyshev-type families
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ChebyshevFamily:
    """``R_n = (alpha X + beta) R_{n-1} - R_{n-2}`` with constant ``R_0`` and linear ``R_1``."""

    alpha: Fraction
    beta: Fraction
    r0: Fraction
    r1: tuple[Fraction, Fraction]  # (constant, linear) coefficients
    a: Fraction
    b: Fraction

    def __post_init__(self):
        if self.alpha == 0:
            raise ValueError("alpha must be nonzero")
        if self.r1[1] == 0:
            raise ValueError("R_1 must have degree 1")
        if self.r0 == 0:
            raise ValueError("R_0 must be a nonzero constant")
        if not self.a < self.b:
            raise ValueError("need a < b")

    @classmethod
    def from_polys(cls, alpha, beta, r0: IntPolynomial, r1: IntPolynomial, a, b) -> ChebyshevFamily:
        if r0.degree != 0 or r1.degree != 1:
            raise ValueError("R_0 must be constant and R_1 linear")
        F = Fraction
        return cls(F(alpha), F(beta), F(r0[0]), (F(r1[0]), F(r1[1])), F(a), F(b))

    def values(self, x: Rational, N: int) -> list[Fraction]:
        """``R_0(x), ..., R_N(x)`` computed by the recurrence on values."""
        x = Fraction(x)
        out = [self.r0, self.r1[0] + self.r1[1] * x]
        mult = self.alpha * x + self.beta
        while len(out) <= N:
            out.append(mult * out[-1] - out[-2])
        return out[: N + 1]

    def members(self, N: int) -> list[IntPolynomial]:
        """``R_0..R_N`` as integer polynomials (requires integral data)."""
        data = [self.alpha, self.beta, self.r0, *self.r1]
        if any(c.denominator != 1 for c in data):
            raise ValueError("family has non-integral coefficients")
        mult = IntPolynomial((int(self.beta), int(self.alpha)))
        out = [IntPolynomial.constant(int(self.r0)), IntPolynomial((int(self.r1[0]), int(self.r1[1])))]
        while len(out) <= N:
            out.append(mult * out[-1] - out[-2])
        return out[: N + 1]


def check_boundary_signs(f: ChebyshevFamily, N: int) -> bool:
    """One of the two boundary sign patterns holds for every ``0 <= n < N``, the same one throughout."""
    va, vb = f.values(f.a, N), f.values(f.b, N)
    pattern_i = all(va[n] * va[n + 1] > 0 and vb[n] * vb[n + 1] < 0 for n in range(N))
    pattern_ii = all(va[n] * va[n + 1] < 0 and vb[n] * vb[n + 1] > 0 for n in range(N))
    return pattern_i or pattern_ii


def k_ladder(parity: int) -> ChebyshevFamily:
    """``K_parity, K_{parity+2}, ...`` as a Chebyshev-type family on (0, 4)."""
    return ChebyshevFamily.from_polys(1, -2, k_reduced(parity), k_reduced(parity + 2), 0, 4)


# ---------------------------------------------------------------------------
# interlacing and dominant roots
# ---------------------------------------------------------------------------


def verify_interlacing(
    p: IntPolynomial,
    q: IntPolynomial,
    a: Rational,
    b: Rational,
    width: Rational = DEFAULT_WIDTH,
    retries: int = MAX_RETRIES,
) -> bool:
    """True iff the roots of ``q`` (degree ``deg p + 1``) strictly separate those of ``p`` in ``(a, b)``."""
    if q.degree != p.degree + 1:
        raise ValueError("need deg q = deg p + 1")
    for poly in (p, q):
        if poly.degree > 0 and not verify_in_interval(poly, a, b, width=width):
            raise CertificationError(f"{poly} does not have all roots real in ({a}, {b})", poly)
    w = Fraction(width)
    for _ in range(retries + 1):
        ip = isolate(p, a, b, w).intervals if p.degree > 0 else []
        iq = isolate(q, a, b, w).intervals
        tagged = sorted([(iv.lo, iv.hi, "p", iv) for iv in ip] + [(iv.lo, iv.hi, "q", iv) for iv in iq])
        if all(_disjoint(x[3], y[3]) for x, y in zip(tagged, tagged[1:])):
            labels = [t[2] for t in tagged]
            expected = ["q"] + ["p", "q"] * p.degree
            return labels == expected
        w /= 2
    raise InconclusiveError(f"could not separate roots of {p} and {q} down to width {w}", p)


def dominant_root(p: IntPolynomial, width: Rational = DEFAULT_WIDTH) -> Interval:
    """Rightmost root interval of ``p``, after certifying that all roots are real."""
    _, p0 = p.strip_zero_roots()
    if p0.degree < 1:
        raise CertificationError(f"{p} has no nonzero roots", p)
    f = squarefree_part(p0)
    R = dyadic_radius(f)
    chain = sturm_chain(f)
    if sign_variations(chain, -R) - sign_variations(chain, R) != f.degree:
        raise CertificationError(f"{p} has non-real roots", p)
    return isolate(p0, -R, R, width).intervals[-1]


@dataclass
class RadiusBound:
    """Certified upper bound on the modulus of every nonzero root."""

    bound: Fraction
    route: str
    dominant: Interval
    nonreal: int
    certificate: RootCertificate


def _sqrt_upper(u: Fraction, bits: int = 40) -> Fraction:
    scale = 4**bits
    num = -(-u.numerator * scale // u.denominator)  # ceil
    return Fraction(isqrt(num) + 1, 2**bits)


def spectral_radius_bound(p: IntPolynomial, width: Rational = DEFAULT_WIDTH) -> RadiusBound:
    """Bound ``max |root|`` over the nonzero roots of ``p``.

    Real roots come from Sturm isolation.  A single conjugate pair of
    non-real roots is bounded through the product of all roots,
    ``|z|^2 = |c_0 / c_d| / prod |r_i|``, with each ``|r_i|`` bounded below by
    its interval; more non-real roots are not certified.
    """
    _, p0 = p.strip_zero_roots()
    if p0.degree < 1:
        raise CertificationError(f"{p} has no nonzero roots", p)
    f = squarefree_part(p0)
    if f.degree != p0.degree:
        raise CertificationError(f"{p} has repeated nonzero roots", p)
    R = dyadic_radius(f)
    cert = isolate(p0, -R, R, width)
    ivs = cert.intervals
    nonreal = f.degree - len(ivs)
    real_bound = max((max(abs(iv.lo), abs(iv.hi)) for iv in ivs), default=Fraction(0))
    dominant = max(ivs, key=lambda iv: max(abs(iv.lo), abs(iv.hi))) if ivs else None
    if nonreal == 0:
        return RadiusBound(real_bound, "real", dominant, 0, cert)
    if nonreal != 2:
        raise CertificationError(f"{p} has {nonreal} non-real roots; only one conjugate pair is supported", p)
    floor = cauchy_lower_bound(f)
    prod = Fraction(1)
    for iv in ivs:
        near = Fraction(0) if iv.lo < 0 < iv.hi else min(abs(iv.lo), abs(iv.hi))
        prod *= max(near, floor)
    pair_sq = Fraction(abs(f[0]), abs(f.lead)) / prod
    pair = _sqrt_upper(pair_sq)
    return RadiusBound(max(real_bound, pair), "real+conjugate-pair", dominant, 2, cert)


# ---------------------------------------------------------------------------
# growth bounds
# ---------------------------------------------------------------------------


@dataclass
class ComponentBound:
    family: FamilyId
    polynomial: IntPolynomial
    route: str
    radius: RadiusBound
    attempts: dict[str, str]

    @property
    def gamma(self) -> Fraction:
        return self.radius.bound


@dataclass
class GrowthBound:
    gamma: Fraction
    components: list[ComponentBound]

    def to_json(self) -> dict:
        return {
            "gamma": [self.gamma.numerator, self.gamma.denominator],
            "gamma_float": float(self.gamma),
            "components": [
                {
                    "family": str(c.family),
                    "polynomial": c.polynomial.to_json(),
                    "route": c.route,
                    "attempts": c.attempts,
                    "gamma": [c.gamma.numerator, c.gamma.denominator],
                    "dominant": c.radius.dominant.to_json() if c.radius.dominant else None,
                    "nonreal_roots": c.radius.nonreal,
                    "certificate": c.radius.certificate.to_json(),
                }
                for c in self.components
            ],
        }


def growth_polynomials(fid: FamilyId) -> list[tuple[str, IntPolynomial]]:
    """Candidate certificate routes for the right-angled companion of ``fid``, best first.

    B, F4 and H share the right-angled companion of A; G2 and I2 that of A_2.
    D has a direct route through its own determinant and a second route
    through the K-type monoid that surjects onto it.
    """
    f, n = fid.family, fid.n
    if f is Family.K_INF:
        return [("K", k_reduced(n))]
    if f in (Family.A, Family.B, Family.F4, Family.H, Family.G2, Family.I2):
        return [("A", a_reduced(n))]
    if f is Family.D:
        return [("D-direct", d_reduced(n)), ("K-surjection", k_reduced(n))]
    if f is Family.E:
        return [("E", e_reduced(n))]
    if f is Family.FREE:
        return [("free", IntPolynomial((-n, 1)))]
    if f is Family.FREE_ABELIAN:
        return [("free-abelian", IntPolynomial((-1, 1)) ** n)]
    raise ValueError(f"no polynomial family for {fid}")  # pragma: no cover


def _component_bound(fid: FamilyId, width: Rational, limit: Fraction) -> ComponentBound:
    attempts: dict[str, str] = {}
    winner: Optional[ComponentBound] = None
    for route, poly in growth_polynomials(fid):
        try:
            rb = _radius_allowing_repeats(poly, width)
        except CertificationError as exc:
            attempts[route] = f"failed: {exc}"
            continue
        if rb.bound < limit:
            attempts[route] = "certified"
            if winner is None:
                winner = ComponentBound(fid, poly, route, rb, attempts)
        else:
            attempts[route] = f"failed: bound {float(rb.bound):.6f} not below {limit}"
    if winner is None:
        poly = growth_polynomials(fid)[0][1]
        raise CertificationError(f"{fid}: no route certified a bound below {limit} ({attempts})", poly)
    return winner


def _radius_allowing_repeats(p: IntPolynomial, width: Rational) -> RadiusBound:
    # repeated roots (free abelian) do not change the radius: use the squarefree part
    _, p0 = p.strip_zero_roots()
    f = squarefree_part(p0) if p0.degree > 0 else p0
    if f.lead < 0:
        f = -f
    return spectral_radius_bound(f, width)


def growth_bound(
    ids: Union[FamilyId, Sequence[FamilyId]],
    width: Rational = DEFAULT_WIDTH,
    limit: Rational = 4,
) -> GrowthBound:
    """Certified ``gamma < limit`` bounding the growth rate of the product of the
    given components (the maximum over components)."""
    if isinstance(ids, FamilyId):
        ids = [ids]
    if not ids:
        raise ValueError("need at least one component")
    comps = [_component_bound(fid, width, Fraction(limit)) for fid in ids]
    return GrowthBound(max(c.gamma for c in comps), comps)
