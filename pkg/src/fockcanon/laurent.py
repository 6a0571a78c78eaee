"""Exact arithmetic for Laurent polynomials in the deformation variable q.

Coefficients are arbitrary precision: plain Python integers for the integral
ring, ``fractions.Fraction`` for the rational variant that only appears inside
exponential-formula evaluations.  Values are immutable and always kept in
canonical form: a dense coefficient window between the lowest and highest
nonzero exponent, the zero polynomial having an empty window.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator


class NotAntisymmetricError(ValueError):
    """The polynomial is not antisymmetric under q -> 1/q."""


class NonIntegralResultError(ValueError):
    """A rational intermediate failed to land back in Z[q, 1/q]."""


def _trim(min_exp, coeffs):
    lo, hi = 0, len(coeffs)
    while hi > lo and not coeffs[hi - 1]:
        hi -= 1
    while lo < hi and not coeffs[lo]:
        lo += 1
    if lo == hi:
        return 0, ()
    return min_exp + lo, tuple(coeffs[lo:hi])


def _add_windows(amin, acoeffs, bmin, bcoeffs, zero):
    if not acoeffs:
        return bmin, bcoeffs
    if not bcoeffs:
        return amin, acoeffs
    lo = min(amin, bmin)
    hi = max(amin + len(acoeffs), bmin + len(bcoeffs))
    out = [zero] * (hi - lo)
    for i, c in enumerate(acoeffs):
        out[amin - lo + i] = c
    for i, c in enumerate(bcoeffs):
        out[bmin - lo + i] += c
    return _trim(lo, out)


def _mul_windows(amin, acoeffs, bmin, bcoeffs, zero):
    if not acoeffs or not bcoeffs:
        return 0, ()
    out = [zero] * (len(acoeffs) + len(bcoeffs) - 1)
    for i, a in enumerate(acoeffs):
        if not a:
            continue
        for j, b in enumerate(bcoeffs):
            if b:
                out[i + j] += a * b
    return _trim(amin + bmin, out)


class LaurentPoly:
    """A Laurent polynomial over Z in one variable q."""

    __slots__ = ("min", "coeffs")

    def __init__(self, min_exp: int = 0, coeffs=()):
        m, c = _trim(min_exp, tuple(coeffs))
        object.__setattr__(self, "min", m)
        object.__setattr__(self, "coeffs", c)

    def __setattr__(self, name, value):  # immutability guard
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def monomial(cls, coeff: int = 1, exp: int = 0) -> "LaurentPoly":
        return cls(exp, (coeff,))

    @classmethod
    def from_terms(cls, terms: dict) -> "LaurentPoly":
        if not terms:
            return cls()
        lo = min(terms)
        hi = max(terms)
        window = [0] * (hi - lo + 1)
        for e, c in terms.items():
            window[e - lo] = c
        return cls(lo, window)

    # -- inspection --------------------------------------------------------

    def terms(self) -> Iterator[tuple[int, int]]:
        for i, c in enumerate(self.coeffs):
            if c:
                yield self.min + i, c

    def coeff(self, exp: int) -> int:
        i = exp - self.min
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    @property
    def min_exp(self) -> int:
        return self.min

    @property
    def max_exp(self) -> int:
        return self.min + len(self.coeffs) - 1 if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def eval_one(self) -> int:
        """Exact evaluation at q = 1."""
        return sum(self.coeffs)

    def in_positive_ring(self) -> bool:
        """True iff the polynomial lies in qZ[q] (or is zero)."""
        return not self.coeffs or self.min >= 1

    def in_negative_ring(self) -> bool:
        """True iff the polynomial lies in q^-1 Z[q^-1] (or is zero)."""
        return not self.coeffs or self.max_exp <= -1

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, LaurentPoly):
            m, c = _add_windows(self.min, self.coeffs, other.min, other.coeffs, 0)
            return LaurentPoly(m, c)
        if isinstance(other, int):
            return self + LaurentPoly.monomial(other)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.min, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, (LaurentPoly, int)):
            return self + (-other if isinstance(other, LaurentPoly) else -other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, LaurentPoly):
            m, c = _mul_windows(self.min, self.coeffs, other.min, other.coeffs, 0)
            return LaurentPoly(m, c)
        if isinstance(other, int):
            return LaurentPoly(self.min, tuple(c * other for c in self.coeffs))
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not defined in Z[q,1/q]")
        out = ONE
        for _ in range(k):
            out = out * self
        return out

    def shift(self, exp: int) -> "LaurentPoly":
        """Multiply by the monomial q^exp."""
        return LaurentPoly(self.min + exp, self.coeffs)

    def bar(self) -> "LaurentPoly":
        """Substitute q -> 1/q."""
        return LaurentPoly(-(self.min + len(self.coeffs) - 1), self.coeffs[::-1])

    # -- comparisons -------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.min == other.min and self.coeffs == other.coeffs
        if isinstance(other, int):
            return self == LaurentPoly.monomial(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.min, self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    # -- rendering ---------------------------------------------------------

    def __str__(self):
        return self.pretty()

    def __repr__(self):
        return f"LaurentPoly({self.pretty()!r})"

    def pretty(self) -> str:
        """Plain-text form with caret exponents, e.g. ``q^2-1+q^-2``."""
        return self._render("q^{e}")

    def latex(self) -> str:
        """LaTeX form with braced exponents, e.g. ``q^{2}-1+q^{-2}``."""
        return self._render("q^{{{e}}}")

    def _render(self, exp_fmt: str) -> str:
        if not self.coeffs:
            return "0"
        pieces = []
        for e, c in sorted(self.terms(), key=lambda t: -t[0]):
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if e == 0:
                body = str(a)
            else:
                var = "q" if e == 1 else exp_fmt.format(e=e)
                body = var if a == 1 else f"{a}{var}"
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        out = (first_sign if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            out += sign + body
        return out

    # -- JSON --------------------------------------------------------------

    def to_json(self) -> dict:
        return {"min": self.min, "c": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, doc: dict) -> "LaurentPoly":
        return cls(int(doc["min"]), tuple(int(c) for c in doc["c"]))


ZERO = LaurentPoly()
ONE = LaurentPoly.monomial(1)
Q = LaurentPoly.monomial(1, 1)
QINV = LaurentPoly.monomial(1, -1)


def q_int(n: int) -> LaurentPoly:
    """The symmetric quantum integer [n] = (q^n - q^-n)/(q - q^-1)."""
    if n == 0:
        return ZERO
    if n < 0:
        return -q_int(-n)
    return LaurentPoly(-(n - 1), (1, 0) * (n - 1) + (1,))


def antisym_split(p: LaurentPoly) -> dict[int, int]:
    """Decompose a bar-antisymmetric polynomial as sum r_j (q^j - q^-j).

    Returns the map j -> r_j over j > 0.  Raises NotAntisymmetricError if
    bar(p) != -p, which signals a corrupted bar computation upstream.
    """
    if p.bar() != -p:
        raise NotAntisymmetricError(f"not antisymmetric under q -> 1/q: {p}")
    return {e: c for e, c in p.terms() if e > 0}


class RationalLaurentPoly:
    """Laurent polynomial with Fraction coefficients.

    Quarantined to the exponential-formula oracles; every computation that
    ends in the integral ring must go through :meth:`integral`, which fails
    loudly on a non-unit denominator.
    """

    __slots__ = ("min", "coeffs")

    _FZERO = Fraction(0)

    def __init__(self, min_exp: int = 0, coeffs=()):
        m, c = _trim(min_exp, tuple(Fraction(x) for x in coeffs))
        object.__setattr__(self, "min", m)
        object.__setattr__(self, "coeffs", c)

    def __setattr__(self, name, value):
        raise AttributeError("RationalLaurentPoly is immutable")

    @classmethod
    def from_poly(cls, p: LaurentPoly) -> "RationalLaurentPoly":
        return cls(p.min, p.coeffs)

    def terms(self):
        for i, c in enumerate(self.coeffs):
            if c:
                yield self.min + i, c

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        m, c = _add_windows(self.min, self.coeffs, other.min, other.coeffs, self._FZERO)
        return RationalLaurentPoly(m, c)

    __radd__ = __add__

    def __neg__(self):
        return RationalLaurentPoly(self.min, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Fraction):
            return RationalLaurentPoly(self.min, tuple(c * other for c in self.coeffs))
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        m, c = _mul_windows(self.min, self.coeffs, other.min, other.coeffs, self._FZERO)
        return RationalLaurentPoly(m, c)

    __rmul__ = __mul__

    @classmethod
    def _coerce(cls, other):
        if isinstance(other, RationalLaurentPoly):
            return other
        if isinstance(other, LaurentPoly):
            return cls.from_poly(other)
        if isinstance(other, (int, Fraction)):
            return cls(0, (other,))
        return NotImplemented

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.min == other.min and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.min, self.coeffs))

    def integral(self) -> LaurentPoly:
        """Convert back to Z[q,1/q]; raise NonIntegralResultError otherwise."""
        out = []
        for c in self.coeffs:
            if c.denominator != 1:
                raise NonIntegralResultError(f"non-integral coefficient {c}")
            out.append(c.numerator)
        return LaurentPoly(self.min, out)

    def __repr__(self):
        body = " + ".join(f"({c})q^{e}" for e, c in self.terms()) or "0"
        return f"RationalLaurentPoly({body})"
