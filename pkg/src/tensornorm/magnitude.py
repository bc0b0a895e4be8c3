"""Exact arithmetic on the multiplicative value monoid 2**Q union {0}.

Every absolute value this library ever produces is either zero or an exact
power 2**q with q an arbitrary-precision rational, so magnitudes are stored
as their exponent (a ``fractions.Fraction``, always in lowest terms) or as
the distinguished zero.  Multiplication adds exponents, comparison compares
them, and zero is absorbing and strictly smaller than everything else.
No floating point is involved anywhere.

Text form: ``"0"`` for zero, ``"2^p/q"`` for the positive value 2**(p/q)
(e.g. ``"2^-1"``, ``"2^1/2"``).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

ExponentLike = Union[Fraction, int, str]


class Magnitude:
    """A value in 2**Q union {0}, ordered and multiplied exactly."""

    __slots__ = ("_exp",)

    def __init__(self, exponent: ExponentLike | None):
        # exponent None encodes the zero magnitude
        self._exp = None if exponent is None else Fraction(exponent)

    @classmethod
    def zero(cls) -> "Magnitude":
        return _ZERO

    @classmethod
    def one(cls) -> "Magnitude":
        return _ONE

    @classmethod
    def pos(cls, exponent: ExponentLike) -> "Magnitude":
        """The positive magnitude 2**exponent."""
        return cls(exponent)

    @classmethod
    def from_text(cls, text: str) -> "Magnitude":
        """Parse the text form produced by ``str()``."""
        text = text.strip()
        if text == "0":
            return _ZERO
        if not text.startswith("2^"):
            raise ValueError(f"not a magnitude: {text!r}")
        return cls(Fraction(text[2:]))

    @property
    def is_zero(self) -> bool:
        return self._exp is None

    @property
    def exponent(self) -> Fraction:
        """Exponent of a positive magnitude; rejects zero."""
        if self._exp is None:
            raise ValueError("zero magnitude has no exponent")
        return self._exp

    def __mul__(self, other: "Magnitude") -> "Magnitude":
        if self._exp is None or other._exp is None:
            return _ZERO
        return Magnitude(self._exp + other._exp)

    def __pow__(self, n: int) -> "Magnitude":
        if self._exp is None:
            if n > 0:
                return _ZERO
            raise ValueError("zero magnitude cannot be raised to a power <= 0")
        return Magnitude(self._exp * n)

    def compare(self, other: "Magnitude") -> int:
        """-1, 0 or +1 as self is smaller than, equal to or greater than other."""
        if self._exp is None:
            return 0 if other._exp is None else -1
        if other._exp is None:
            return 1
        if self._exp < other._exp:
            return -1
        if self._exp > other._exp:
            return 1
        return 0

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Magnitude):
            return NotImplemented
        return self._exp == other._exp

    def __lt__(self, other: "Magnitude") -> bool:
        return self.compare(other) < 0

    def __le__(self, other: "Magnitude") -> bool:
        return self.compare(other) <= 0

    def __gt__(self, other: "Magnitude") -> bool:
        return self.compare(other) > 0

    def __ge__(self, other: "Magnitude") -> bool:
        return self.compare(other) >= 0

    def __hash__(self) -> int:
        return hash(("Magnitude", self._exp))

    def __str__(self) -> str:
        if self._exp is None:
            return "0"
        return f"2^{self._exp}"

    def __repr__(self) -> str:
        return f"Magnitude({'zero' if self._exp is None else str(self._exp)})"


_ZERO = Magnitude(None)
_ONE = Magnitude(0)


def scaled_compare(a: Magnitude, factor: Fraction, b: Magnitude) -> int:
    """Compare factor * a against b exactly, for a positive rational factor.

    Needed for inequalities like |x| <= r * |y| where r is an arbitrary
    positive rational, not itself a power of two.  Returns -1, 0 or +1.
    """
    factor = Fraction(factor)
    if factor <= 0:
        raise ValueError("factor must be a positive rational")
    if a.is_zero:
        return 0 if b.is_zero else -1
    if b.is_zero:
        return 1
    # factor * 2^qa ? 2^qb  <=>  factor ? 2^(qb - qa)
    q = b.exponent - a.exponent
    n, d = factor.numerator, factor.denominator
    s, t = q.numerator, q.denominator
    # n/d ? 2^(s/t)  <=>  n^t / d^t ? 2^s, with s shifted to whichever side
    # keeps the arithmetic integral.
    lhs, rhs = n**t, d**t
    if s >= 0:
        rhs <<= s
    else:
        lhs <<= -s
    if lhs < rhs:
        return -1
    if lhs > rhs:
        return 1
    return 0
