"""Exact arithmetic in the real quadratic field Q(sqrt(3)).

A value is stored as an ordered pair (p, q) of rationals and denotes
p + q*sqrt(3).  Because sqrt(3) is irrational the representation is
unique, so equality is componentwise and every sign query can be decided
without any floating-point arithmetic: when p and q disagree in sign the
comparison of p**2 against 3*q**2 tells which term dominates.

Rational components are `fractions.Fraction` instances, which already
guarantee the canonical form (reduced, positive denominator) and
arbitrary precision.
"""

from __future__ import annotations

from fractions import Fraction
from functools import total_ordering
from math import sqrt
from typing import Union

RationalLike = Union[int, Fraction]
QSqrt3Like = Union[int, Fraction, "QSqrt3"]

_SQRT3_FLOAT = sqrt(3.0)


@total_ordering
class QSqrt3:
    """An element p + q*sqrt(3) of Q(sqrt(3)), immutable and hashable."""

    __slots__ = ("_p", "_q")

    def __init__(self, p: RationalLike = 0, q: RationalLike = 0) -> None:
        if not isinstance(p, (int, Fraction)) or not isinstance(q, (int, Fraction)):
            raise TypeError("components must be int or Fraction, not float")
        self._p = Fraction(p)
        self._q = Fraction(q)

    @property
    def p(self) -> Fraction:
        """Rational part."""
        return self._p

    @property
    def q(self) -> Fraction:
        """Coefficient of sqrt(3)."""
        return self._q

    @classmethod
    def _coerce(cls, value: QSqrt3Like) -> QSqrt3:
        if isinstance(value, QSqrt3):
            return value
        if isinstance(value, (int, Fraction)):
            return cls(value)
        return NotImplemented  # type: ignore[return-value]

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other: QSqrt3Like) -> QSqrt3:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QSqrt3(self._p + other._p, self._q + other._q)

    __radd__ = __add__

    def __sub__(self, other: QSqrt3Like) -> QSqrt3:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QSqrt3(self._p - other._p, self._q - other._q)

    def __rsub__(self, other: QSqrt3Like) -> QSqrt3:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other: QSqrt3Like) -> QSqrt3:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        # (p1 + q1 s)(p2 + q2 s) with s**2 = 3.
        return QSqrt3(
            self._p * other._p + 3 * self._q * other._q,
            self._p * other._q + self._q * other._p,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: QSqrt3Like) -> QSqrt3:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        # Multiply by the conjugate; the norm p**2 - 3 q**2 vanishes only
        # for zero because sqrt(3) is irrational.
        norm = other._p * other._p - 3 * other._q * other._q
        if norm == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt(3))")
        inv = Fraction(1) / norm
        return QSqrt3(
            (self._p * other._p - 3 * self._q * other._q) * inv,
            (self._q * other._p - self._p * other._q) * inv,
        )

    def __rtruediv__(self, other: QSqrt3Like) -> QSqrt3:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __neg__(self) -> QSqrt3:
        return QSqrt3(-self._p, -self._q)

    def __pos__(self) -> QSqrt3:
        return self

    def __abs__(self) -> QSqrt3:
        return -self if self.sign() < 0 else self

    # -- exact sign and order -----------------------------------------

    def sign(self) -> int:
        """Exact sign in {-1, 0, +1}, decided by rational arithmetic only."""
        sp = (self._p > 0) - (self._p < 0)
        sq = (self._q > 0) - (self._q < 0)
        if sq == 0:
            return sp
        if sp == 0:
            return sq
        if sp == sq:
            return sp
        # Mixed signs: |p| vs |q|*sqrt(3), i.e. p**2 vs 3*q**2.  Equality
        # is impossible for nonzero rationals, so the larger square wins.
        diff = self._p * self._p - 3 * self._q * self._q
        return sp if diff > 0 else sq

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = QSqrt3(other)
        if not isinstance(other, QSqrt3):
            return NotImplemented
        return self._p == other._p and self._q == other._q

    def __lt__(self, other: QSqrt3Like) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self - other).sign() < 0

    def __hash__(self) -> int:
        return hash((self._p, self._q))

    def __bool__(self) -> bool:
        return bool(self._p) or bool(self._q)

    # -- conversions ---------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self._q == 0

    def __float__(self) -> float:
        """Approximate value; for display only, never for decisions."""
        return float(self._p) + float(self._q) * _SQRT3_FLOAT

    def __repr__(self) -> str:
        return f"QSqrt3({self._p!r}, {self._q!r})"

    def __str__(self) -> str:
        if self._q == 0:
            return str(self._p)
        if self._p == 0:
            return f"{self._q}*sqrt(3)"
        op = "+" if self._q > 0 else "-"
        return f"{self._p} {op} {abs(self._q)}*sqrt(3)"


ZERO = QSqrt3(0)
ONE = QSqrt3(1)
SQRT3 = QSqrt3(0, 1)
HALF = Fraction(1, 2)


def sign(value: QSqrt3Like) -> int:
    """Exact sign of a field element (or of a plain rational)."""
    if not isinstance(value, QSqrt3):
        value = QSqrt3(value)
    return value.sign()
