"""Exact non-negative scalars of the form sqrt(q) for rational q.

Classical density matrices have rational diagonals but off-diagonals like
sqrt(p_j * p_k) / Pr(S). Storing the exact rational value of the *square*
keeps every such entry exact: the constructions only ever multiply, mask,
or rescale entries, so values never leave the sqrt-of-rational set, and all
invariant checks can compare squares with no floating point involved.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt, sqrt
from numbers import Rational


def fraction_sqrt(q: Fraction) -> Fraction | None:
    """Exact square root of a non-negative rational, or None if irrational."""
    if q < 0:
        raise ValueError("no real square root of a negative rational")
    rn = isqrt(q.numerator)
    rd = isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None


def parse_fraction(text: str) -> Fraction:
    """Parse 'num/den' (or a plain integer string) into a Fraction."""
    return Fraction(text.strip())


class SqrtRational:
    """A non-negative real stored exactly as the rational value of its square.

    Closed under multiplication and division by non-negative rationals and
    by each other; sums are never needed off the rational subset. Equality
    and hashing go through the square, which is exact.
    """

    __slots__ = ("square",)

    def __init__(self, square: Fraction | int) -> None:
        square = Fraction(square)
        if square < 0:
            raise ValueError("square of a real must be non-negative")
        object.__setattr__(self, "square", square)

    def __setattr__(self, name, value):
        raise AttributeError("SqrtRational is immutable")

    @classmethod
    def from_value(cls, value: Fraction | int) -> "SqrtRational":
        value = Fraction(value)
        if value < 0:
            raise ValueError("SqrtRational holds non-negative values only")
        return cls(value * value)

    @classmethod
    def zero(cls) -> "SqrtRational":
        return cls(Fraction(0))

    @property
    def is_zero(self) -> bool:
        return self.square == 0

    def try_fraction(self) -> Fraction | None:
        return fraction_sqrt(self.square)

    def as_fraction(self) -> Fraction:
        value = self.try_fraction()
        if value is None:
            raise ValueError(f"sqrt({self.square}) is irrational")
        return value

    def __mul__(self, other):
        if isinstance(other, SqrtRational):
            return SqrtRational(self.square * other.square)
        if isinstance(other, Rational):
            if other < 0:
                raise ValueError("cannot scale a non-negative entry by a negative")
            return SqrtRational(self.square * other * other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, SqrtRational):
            return SqrtRational(self.square / other.square)
        if isinstance(other, Rational):
            if other <= 0:
                raise ValueError("division requires a positive rational")
            return SqrtRational(self.square / (other * other))
        return NotImplemented

    def __eq__(self, other) -> bool:
        if isinstance(other, SqrtRational):
            return self.square == other.square
        if isinstance(other, Rational):
            return other >= 0 and self.square == other * other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("SqrtRational", self.square))

    def __float__(self) -> float:
        return sqrt(float(self.square))

    def __str__(self) -> str:
        value = self.try_fraction()
        if value is not None:
            return str(value)
        return f"sqrt({self.square})"

    def __repr__(self) -> str:
        return f"SqrtRational(square={self.square!r})"


def parse_entry(text: str) -> SqrtRational:
    """Parse 'num/den' or 'sqrt(num/den)' back into a SqrtRational."""
    text = text.strip()
    if text.startswith("sqrt(") and text.endswith(")"):
        return SqrtRational(parse_fraction(text[5:-1]))
    return SqrtRational.from_value(parse_fraction(text))
