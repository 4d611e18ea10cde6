"""Exact rational numbers and quadratic surds ``rat + irr * sqrt(q)``."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import IntEnum, StrEnum
from fractions import Fraction

Rational = Fraction
RationalLike = int | Fraction


class RadicandMismatchError(ValueError):
    """Raised when surds over different radicands are combined."""


class Ordering(IntEnum):
    """Result of an exact comparison."""

    LESS = -1
    EQUAL = 0
    GREATER = 1


class SurdOp(StrEnum):
    """Field operations supported by :func:`surd_arith`."""

    ADD = "add"
    SUB = "sub"
    MUL = "mul"
    DIV = "div"


def _sign(value: RationalLike) -> int:
    return (value > 0) - (value < 0)


def is_square(n: int) -> bool:
    if n < 0:
        return False
    root = math.isqrt(n)
    return root * root == n


def floor_sqrt(value: RationalLike) -> int:
    """Return floor(sqrt(value)) for a nonnegative rational."""
    if value < 0:
        raise ValueError(f"square root of negative value {value}")
    return math.isqrt(math.floor(value))


def ceil_sqrt(value: RationalLike) -> int:
    root = floor_sqrt(value)
    return root if root * root == value else root + 1


@dataclass(frozen=True, slots=True)
class QuadSurd:
    """Element ``rat + irr * sqrt(q)`` of Q(sqrt(q)).

    Perfect-square radicands are folded into ``rat`` at construction so that
    ``irr != 0`` always means an irrational value.
    """

    rat: Fraction
    irr: Fraction
    q: int

    def __post_init__(self) -> None:
        if self.q < 1:
            raise ValueError(f"radicand must be positive, got {self.q}")
        rat = Fraction(self.rat)
        irr = Fraction(self.irr)
        root = math.isqrt(self.q)
        if irr and root * root == self.q:
            rat += irr * root
            irr = Fraction(0)
        object.__setattr__(self, "rat", rat)
        object.__setattr__(self, "irr", irr)

    @classmethod
    def rational(cls, value: RationalLike, q: int) -> QuadSurd:
        return cls(Fraction(value), Fraction(0), q)

    @classmethod
    def root(cls, q: int) -> QuadSurd:
        """Return sqrt(q) itself."""
        return cls(Fraction(0), Fraction(1), q)

    def _coerce(self, other: QuadSurd | RationalLike) -> QuadSurd:
        if isinstance(other, QuadSurd):
            if other.q != self.q:
                raise RadicandMismatchError(
                    f"cannot combine sqrt({self.q}) with sqrt({other.q})"
                )
            return other
        return QuadSurd.rational(other, self.q)

    def __add__(self, other: QuadSurd | RationalLike) -> QuadSurd:
        return surd_arith(self, self._coerce(other), SurdOp.ADD)

    __radd__ = __add__

    def __sub__(self, other: QuadSurd | RationalLike) -> QuadSurd:
        return surd_arith(self, self._coerce(other), SurdOp.SUB)

    def __rsub__(self, other: RationalLike) -> QuadSurd:
        return surd_arith(self._coerce(other), self, SurdOp.SUB)

    def __mul__(self, other: QuadSurd | RationalLike) -> QuadSurd:
        return surd_arith(self, self._coerce(other), SurdOp.MUL)

    __rmul__ = __mul__

    def __truediv__(self, other: QuadSurd | RationalLike) -> QuadSurd:
        return surd_arith(self, self._coerce(other), SurdOp.DIV)

    def __rtruediv__(self, other: RationalLike) -> QuadSurd:
        return surd_arith(self._coerce(other), self, SurdOp.DIV)

    def __neg__(self) -> QuadSurd:
        return QuadSurd(-self.rat, -self.irr, self.q)

    def conjugate(self) -> QuadSurd:
        return QuadSurd(self.rat, -self.irr, self.q)

    def is_zero(self) -> bool:
        return not self.rat and not self.irr

    def sign(self) -> int:
        return surd_sign(self)

    def compare(self, other: QuadSurd | RationalLike) -> Ordering:
        return Ordering(surd_sign(self - self._coerce(other)))

    def __str__(self) -> str:
        if not self.irr:
            return str(self.rat)
        return f"{self.rat} + {self.irr}*sqrt({self.q})"


def surd_sign(s: QuadSurd) -> int:
    """Return the exact sign of ``s`` as -1, 0 or +1."""
    rat_sign = _sign(s.rat)
    irr_sign = _sign(s.irr)
    if irr_sign == 0:
        return rat_sign
    if rat_sign == 0 or rat_sign == irr_sign:
        return irr_sign
    # opposite signs: the larger square wins
    balance = _sign(s.rat * s.rat - s.irr * s.irr * s.q)
    return rat_sign * balance


def surd_arith(a: QuadSurd, b: QuadSurd, op: SurdOp | str) -> QuadSurd:
    """Exact field arithmetic in Q(sqrt(q))."""
    if a.q != b.q:
        raise RadicandMismatchError(f"cannot combine sqrt({a.q}) with sqrt({b.q})")
    q = a.q
    match SurdOp(op):
        case SurdOp.ADD:
            return QuadSurd(a.rat + b.rat, a.irr + b.irr, q)
        case SurdOp.SUB:
            return QuadSurd(a.rat - b.rat, a.irr - b.irr, q)
        case SurdOp.MUL:
            return QuadSurd(a.rat * b.rat + a.irr * b.irr * q, a.rat * b.irr + a.irr * b.rat, q)
        case SurdOp.DIV:
            denominator = b.rat * b.rat - b.irr * b.irr * q
            if not denominator:
                raise ZeroDivisionError("division by a zero surd")
            numerator = surd_arith(a, b.conjugate(), SurdOp.MUL)
            return QuadSurd(numerator.rat / denominator, numerator.irr / denominator, q)
    raise ValueError(f"unsupported surd operation: {op}")


def rational_cmp(a: RationalLike, b: RationalLike) -> Ordering:
    """Compare two rationals exactly by cross-multiplication."""
    left = Fraction(a)
    right = Fraction(b)
    return Ordering(_sign(left.numerator * right.denominator - right.numerator * left.denominator))
