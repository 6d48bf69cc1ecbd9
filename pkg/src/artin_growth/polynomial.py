"""Dense univariate polynomials with arbitrary-precision integer coefficients.

Coefficients are stored constant term first.  All operations are exact;
evaluation at a rational point returns a :class:`fractions.Fraction`.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

Number = Union[int, Fraction]


def _strip(coeffs: Iterable[int]) -> tuple[int, ...]:
    cs = list(coeffs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


class IntPolynomial:
    """Immutable integer polynomial ``c[0] + c[1] x + ... + c[d] x^d``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = _strip(coeffs)
        for c in cs:
            if not isinstance(c, int) or isinstance(c, bool):
                raise TypeError(f"coefficients must be int, got {c!r}")
        object.__setattr__(self, "coeffs", cs)

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    # -- constructors -------------------------------------------------------
    @classmethod
    def constant(cls, c: int) -> IntPolynomial:
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, c: int = 1) -> IntPolynomial:
        if degree < 0:
            raise ValueError("degree must be nonnegative")
        return cls((0,) * degree + (c,))

    @classmethod
    def x(cls) -> IntPolynomial:
        return cls((0, 1))

    @classmethod
    def from_roots(cls, roots: Sequence[int]) -> IntPolynomial:
        out = cls((1,))
        for r in roots:
            out = out * cls((-r, 1))
        return out

    # -- basic properties ----------------------------------------------------
    @property
    def degree(self) -> int:
        """Degree; ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.lead == 1

    def __getitem__(self, i: int) -> int:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, IntPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == _strip((other,))
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    # -- ring operations -----------------------------------------------------
    @staticmethod
    def _coerce(other) -> IntPolynomial:
        if isinstance(other, IntPolynomial):
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return IntPolynomial((other,))
        raise TypeError(f"cannot combine IntPolynomial with {type(other).__name__}")

    def __add__(self, other) -> IntPolynomial:
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        return IntPolynomial(self[i] + o[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other) -> IntPolynomial:
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> IntPolynomial:
        return (-self) + other

    def __mul__(self, other) -> IntPolynomial:
        if isinstance(other, int) and not isinstance(other, bool):
            return self.scale(other)
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> IntPolynomial:
        if k < 0:
            raise ValueError("negative power")
        out, base = IntPolynomial((1,)), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def scale(self, c: int) -> IntPolynomial:
        return IntPolynomial(c * a for a in self.coeffs)

    def shift(self, c: int) -> IntPolynomial:
        """Return ``p(x + c)`` (Taylor shift)."""
        out = IntPolynomial()
        lin = IntPolynomial((c, 1))
        for a in reversed(self.coeffs):
            out = out * lin + a
        return out

    def derivative(self) -> IntPolynomial:
        return IntPolynomial(i * c for i, c in enumerate(self.coeffs) if i)

    # -- monomial factors ----------------------------------------------------
    def zero_multiplicity(self) -> int:
        """Multiplicity of 0 as a root (the number of trailing zero coefficients)."""
        if not self.coeffs:
            raise ValueError("zero polynomial has no finite root multiplicity")
        k = 0
        while self.coeffs[k] == 0:
            k += 1
        return k

    def mul_monomial(self, k: int) -> IntPolynomial:
        if not self.coeffs:
            return self
        return IntPolynomial((0,) * k + self.coeffs)

    def div_monomial(self, k: int) -> IntPolynomial:
        """Exact division by ``x^k``; raises ValueError if ``x^k`` does not divide."""
        if k < 0:
            raise ValueError("negative monomial power")
        if any(self.coeffs[:k]):
            raise ValueError(f"{self} is not divisible by x^{k}")
        return IntPolynomial(self.coeffs[k:])

    def strip_zero_roots(self) -> tuple[int, IntPolynomial]:
        m = self.zero_multiplicity()
        return m, IntPolynomial(self.coeffs[m:])

    def reciprocal(self) -> IntPolynomial:
        """``x^d p(1/x)`` with ``d = deg p``: the coefficient list reversed."""
        return IntPolynomial(reversed(self.coeffs))

    # -- division ------------------------------------------------------------
    def divmod_exact(self, other: IntPolynomial) -> IntPolynomial:
        """Quotient of an exact division in Z[x]; raises ValueError on a remainder."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            if rem:
                raise ValueError(f"{other} does not divide {self}")
            return IntPolynomial()
        quot = [0] * (dq + 1)
        lead = other.lead
        for i in range(dq, -1, -1):
            c = rem[i + other.degree]
            if c % lead:
                raise ValueError(f"{other} does not divide {self}")
            q = c // lead
            quot[i] = q
            if q:
                for j, b in enumerate(other.coeffs):
                    rem[i + j] -= q * b
        if any(rem):
            raise ValueError(f"{other} does not divide {self}")
        return IntPolynomial(quot)

    def __floordiv__(self, other) -> IntPolynomial:
        return self.divmod_exact(self._coerce(other))

    # -- evaluation ----------------------------------------------------------
    def __call__(self, x: Number) -> Number:
        acc: Number = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def evaluate(self, x: Number) -> Fraction:
        return Fraction(self(Fraction(x)))

    def sign_at(self, x: Number) -> int:
        """Sign of ``p(x)`` at a rational point, using integer arithmetic only."""
        x = Fraction(x)
        num, den = x.numerator, x.denominator
        d = self.degree
        if d < 0:
            return 0
        # acc = den^d * p(num/den); den > 0 so the sign is preserved
        acc = 0
        dpow = 1
        for c in reversed(self.coeffs):
            acc = acc * num + c * dpow
            dpow *= den
        return (acc > 0) - (acc < 0)

    # -- formatting ----------------------------------------------------------
    def format(self, var: str = "λ") -> str:
        """Canonical text form, ascending powers, e.g. ``2 - 4λ + λ^2``."""
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                mono = var if i == 1 else f"{var}^{i}"
                body = mono if mag == 1 else f"{mag}{mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"

    def to_json(self) -> list[int]:
        return list(self.coeffs)

    @classmethod
    def from_json(cls, data: Sequence[int]) -> IntPolynomial:
        return cls(int(c) for c in data)


X = IntPolynomial.x()
ONE = IntPolynomial.constant(1)
