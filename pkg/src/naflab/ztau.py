"""Exact arithmetic in Z[tau] for tau**2 = p*tau - q, plus the plane embedding.

Plane points use the basis (1, i*Im(tau)): ``a + b*tau`` maps to
``(a + b*p/2, b)`` so every Voronoi quantity stays rational.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import floor

from naflab.arith import RationalLike


class InvalidTauParametersError(ValueError):
    """Raised for (p, q) that do not define an imaginary quadratic base."""


@dataclass(frozen=True)
class TauParams:
    """Base tau given by tau**2 - p*tau + q = 0 with q > p**2/4."""

    p: int
    q: int

    def __post_init__(self) -> None:
        if 4 * self.q <= self.p * self.p:
            raise InvalidTauParametersError(
                f"q={self.q} must exceed p^2/4={Fraction(self.p * self.p, 4)} "
                "for an imaginary quadratic base"
            )

    @cached_property
    def half_p(self) -> Fraction:
        return Fraction(self.p, 2)

    @cached_property
    def msq(self) -> Fraction:
        """(Im tau)^2 = q - p^2/4."""
        return Fraction(4 * self.q - self.p * self.p, 4)

    @cached_property
    def frac(self) -> Fraction:
        """Fractional part of Re tau = p/2, always 0 or 1/2."""
        return self.half_p - floor(self.half_p)

    def require_expanding(self) -> None:
        if self.q < 2:
            raise InvalidTauParametersError(
                f"q={self.q} gives |tau| <= 1; digit sets need q >= 2"
            )

    def __str__(self) -> str:
        return f"p={self.p}, q={self.q}"


@dataclass(frozen=True, slots=True, order=True)
class ZTauElem:
    """Lattice element ``a + b*tau``."""

    a: int
    b: int

    @classmethod
    def parse(cls, text: str) -> ZTauElem:
        parts = [part.strip() for part in str(text).split(",")]
        if len(parts) != 2:
            raise ValueError(f"expected 'a,b' coordinates, got {text!r}")
        try:
            return cls(int(parts[0]), int(parts[1]))
        except ValueError as exc:
            raise ValueError(f"expected integer coordinates in {text!r}") from exc

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def __str__(self) -> str:
        return f"{self.a},{self.b}"


ZERO = ZTauElem(0, 0)
ONE = ZTauElem(1, 0)
TAU = ZTauElem(0, 1)


@dataclass(frozen=True, slots=True)
class PlanePoint:
    """Point ``x + y*(i*Im tau)`` with rational coordinates."""

    x: Fraction
    y: Fraction

    @classmethod
    def of(cls, x: RationalLike, y: RationalLike) -> PlanePoint:
        return cls(Fraction(x), Fraction(y))

    def __add__(self, other: PlanePoint) -> PlanePoint:
        return PlanePoint(self.x + other.x, self.y + other.y)

    def __sub__(self, other: PlanePoint) -> PlanePoint:
        return PlanePoint(self.x - other.x, self.y - other.y)

    def __neg__(self) -> PlanePoint:
        return PlanePoint(-self.x, -self.y)

    def scaled(self, factor: RationalLike) -> PlanePoint:
        return PlanePoint(self.x * factor, self.y * factor)

    def __str__(self) -> str:
        return f"({self.x}, {self.y})"


def norm_sq(z: ZTauElem, params: TauParams) -> int:
    """|a + b*tau|^2 = a^2 + p*a*b + q*b^2."""
    return z.a * z.a + params.p * z.a * z.b + params.q * z.b * z.b


def add(x: ZTauElem, y: ZTauElem) -> ZTauElem:
    return ZTauElem(x.a + y.a, x.b + y.b)


def sub(x: ZTauElem, y: ZTauElem) -> ZTauElem:
    return ZTauElem(x.a - y.a, x.b - y.b)


def neg(z: ZTauElem) -> ZTauElem:
    return ZTauElem(-z.a, -z.b)


def scale(z: ZTauElem, k: int) -> ZTauElem:
    return ZTauElem(k * z.a, k * z.b)


def mul(x: ZTauElem, y: ZTauElem, params: TauParams) -> ZTauElem:
    bd = x.b * y.b
    return ZTauElem(x.a * y.a - params.q * bd, x.a * y.b + x.b * y.a + params.p * bd)


def power(z: ZTauElem, n: int, params: TauParams) -> ZTauElem:
    if n < 0:
        raise ValueError(f"negative exponent {n}")
    result = ONE
    base = z
    while n:
        if n & 1:
            result = mul(result, base, params)
        base = mul(base, base, params)
        n >>= 1
    return result


def tau_power(n: int, params: TauParams) -> ZTauElem:
    return power(TAU, n, params)


def conj(z: ZTauElem, params: TauParams) -> ZTauElem:
    """Complex conjugate; conj(tau) = p - tau."""
    return ZTauElem(z.a + params.p * z.b, -z.b)


def div_tau(z: ZTauElem, params: TauParams) -> ZTauElem | None:
    """Exact quotient z/tau, or None when tau does not divide z."""
    if z.a % params.q:
        return None
    k = z.a // params.q
    return ZTauElem(z.b + params.p * k, -k)


def divisible_by_tau_pow(z: ZTauElem, k: int, params: TauParams) -> bool:
    for _ in range(k):
        if z.is_zero():
            return True
        quotient = div_tau(z, params)
        if quotient is None:
            return False
        z = quotient
    return True


def div_exact(x: ZTauElem, y: ZTauElem, params: TauParams) -> ZTauElem | None:
    """Exact quotient x/y in Z[tau], or None when y does not divide x."""
    n = norm_sq(y, params)
    if n == 0:
        raise ZeroDivisionError("division by zero in Z[tau]")
    numerator = mul(x, conj(y, params), params)
    if numerator.a % n or numerator.b % n:
        return None
    return ZTauElem(numerator.a // n, numerator.b // n)


def residue_key(z: ZTauElem, w: int, params: TauParams) -> tuple[int, ...]:
    """Canonical key of z modulo tau**w, one remainder in [0, q) per tau-digit."""
    q = params.q
    p = params.p
    a, b = z.a, z.b
    key: list[int] = []
    for _ in range(w):
        r = a % q
        key.append(r)
        k = (a - r) // q
        a, b = b + p * k, -k
    return tuple(key)


def inner2(x: ZTauElem, y: ZTauElem, params: TauParams) -> int:
    """Twice the real inner product of x and y in the plane, an integer."""
    return 2 * x.a * y.a + params.p * (x.a * y.b + x.b * y.a) + 2 * params.q * x.b * y.b


def to_plane(z: ZTauElem, params: TauParams) -> PlanePoint:
    return PlanePoint(z.a + z.b * params.half_p, Fraction(z.b))


def plane_norm_sq(pt: PlanePoint, params: TauParams) -> Fraction:
    return pt.x * pt.x + pt.y * pt.y * params.msq


def plane_inner(u: PlanePoint, v: PlanePoint, params: TauParams) -> Fraction:
    return u.x * v.x + u.y * v.y * params.msq


def plane_mul_tau(pt: PlanePoint, k: int, params: TauParams) -> PlanePoint:
    half_p = params.half_p
    msq = params.msq
    x, y = pt.x, pt.y
    for _ in range(k):
        x, y = x * half_p - y * msq, x + y * half_p
    return PlanePoint(x, y)


def plane_mul_tau_inv(pt: PlanePoint, k: int, params: TauParams) -> PlanePoint:
    half_p = params.half_p
    msq = params.msq
    q = params.q
    x, y = pt.x, pt.y
    for _ in range(k):
        x, y = (half_p * x + msq * y) / q, (half_p * y - x) / q
    return PlanePoint(x, y)


def describe(z: ZTauElem) -> str:
    """Human form such as ``2 - 3τ``."""
    if z.b == 0:
        return str(z.a)
    tau_part = {1: "τ", -1: "-τ"}.get(z.b, f"{z.b}τ")
    if z.a == 0:
        return tau_part
    if z.b < 0:
        return f"{z.a} - {tau_part[1:]}"
    return f"{z.a} + {tau_part}"
