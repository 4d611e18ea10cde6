"""Rational integers with base b, |b| >= 2."""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from naflab.arith import floor_sqrt
from naflab.rings.base import Coords, InvalidSystemError, SystemKind


@dataclass(frozen=True, slots=True)
class IntegerRing:
    base: int

    def __post_init__(self) -> None:
        if abs(self.base) < 2:
            raise InvalidSystemError(f"--base must satisfy |b| >= 2, got {self.base}")

    @property
    def kind(self) -> SystemKind:
        return SystemKind.INTEGER

    @property
    def label(self) -> str:
        return f"b={self.base}"

    @property
    def modulus(self) -> int:
        return abs(self.base)

    @property
    def base_norm(self) -> int:
        return self.base * self.base

    @property
    def cell_radius_sq(self) -> Fraction:
        return Fraction(1, 4)

    @property
    def zero(self) -> int:
        return 0

    def is_zero(self, z: int) -> bool:
        return z == 0

    def add(self, x: int, y: int) -> int:
        return x + y

    def sub(self, x: int, y: int) -> int:
        return x - y

    def neg(self, z: int) -> int:
        return -z

    def shift(self, z: int, n: int) -> int:
        return z * self.base**n

    def div_base(self, z: int) -> int | None:
        if z % self.base:
            return None
        return z // self.base

    def residue_key(self, z: int, w: int) -> tuple[int, ...]:
        m = abs(self.base)
        key: list[int] = []
        for _ in range(w):
            r = z % m
            key.append(r)
            z = (z - r) // self.base
        return tuple(key)

    def norm(self, z: int) -> int:
        return z * z

    def ball(self, radius_sq: Fraction | int) -> Iterator[int]:
        if radius_sq < 0:
            return iter(())
        reach = floor_sqrt(radius_sq)
        return iter(range(-reach, reach + 1))

    def parse_element(self, text: str) -> int:
        try:
            return int(str(text).strip())
        except ValueError as exc:
            raise ValueError(f"expected an integer, got {text!r}") from exc

    def format_element(self, z: int) -> str:
        return str(z)

    def describe(self, z: int) -> str:
        return str(z)

    def to_coords(self, elements: Sequence[int]) -> Coords:
        return (np.fromiter(elements, dtype=np.int64, count=len(elements)),)

    def from_coords(self, coords: Sequence[int]) -> int:
        return int(coords[0])

    def batch_is_zero(self, coords: Coords) -> np.ndarray:
        return coords[0] == 0

    def batch_divisible(self, coords: Coords) -> np.ndarray:
        return coords[0] % self.base == 0

    def batch_div_base(self, coords: Coords) -> Coords:
        return (coords[0] // self.base,)

    def batch_residue_index(self, coords: Coords, w: int) -> np.ndarray:
        m = abs(self.base)
        z = coords[0]
        index = np.zeros(z.shape, dtype=np.int64)
        weight = 1
        for _ in range(w):
            r = z % m
            index += r * weight
            weight *= m
            z = (z - r) // self.base
        return index
