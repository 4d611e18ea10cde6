"""Shared interface for the additive groups a number system lives in."""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from enum import StrEnum
from fractions import Fraction
from typing import Protocol, TypeVar

import numpy as np

E = TypeVar("E")

Coords = tuple[np.ndarray, ...]


class SystemKind(StrEnum):
    QUADRATIC = "quadratic"
    INTEGER = "integer"


class InvalidSystemError(ValueError):
    """Raised for an inconsistent or incomplete system selection."""


class GroupRing(Protocol[E]):
    """Group with the expanding endomorphism Phi (multiplication by the base)."""

    @property
    def kind(self) -> SystemKind: ...

    @property
    def label(self) -> str:
        """Short identification such as ``p=3,q=3`` or ``b=2``."""

    @property
    def modulus(self) -> int:
        """Size of one residue-key component (q resp. |b|)."""

    @property
    def base_norm(self) -> int:
        """|base|^2."""

    @property
    def cell_radius_sq(self) -> Fraction:
        """Squared circumradius of the Voronoi cell of 0."""

    @property
    def zero(self) -> E: ...

    def is_zero(self, z: E) -> bool: ...

    def add(self, x: E, y: E) -> E: ...

    def sub(self, x: E, y: E) -> E: ...

    def neg(self, z: E) -> E: ...

    def shift(self, z: E, n: int) -> E:
        """Return Phi^n(z)."""

    def div_base(self, z: E) -> E | None:
        """Exact quotient by the base, or None when not divisible."""

    def residue_key(self, z: E, w: int) -> tuple[int, ...]: ...

    def norm(self, z: E) -> int: ...

    def ball(self, radius_sq: Fraction | int) -> Iterator[E]:
        """Yield all elements of norm at most ``radius_sq`` in a fixed order."""

    def parse_element(self, text: str) -> E: ...

    def format_element(self, z: E) -> str: ...

    def describe(self, z: E) -> str: ...

    def to_coords(self, elements: Sequence[E]) -> Coords:
        """Pack elements into int64 coordinate arrays."""

    def from_coords(self, coords: Sequence[int]) -> E: ...

    def batch_is_zero(self, coords: Coords) -> np.ndarray: ...

    def batch_divisible(self, coords: Coords) -> np.ndarray: ...

    def batch_div_base(self, coords: Coords) -> Coords:
        """Quotient by the base; only meaningful where divisible."""

    def batch_residue_index(self, coords: Coords, w: int) -> np.ndarray:
        """Mixed-radix index of the residue key, ``sum(r_i * modulus**i)``."""


def residue_index(key: Sequence[int], modulus: int) -> int:
    index = 0
    for position, remainder in enumerate(key):
        index += remainder * modulus**position
    return index


def strip_base(ring: GroupRing[E], z: E) -> tuple[E, int]:
    """Divide out the base as often as possible; returns (quotient, count)."""
    count = 0
    if ring.is_zero(z):
        return z, 0
    while True:
        quotient = ring.div_base(z)
        if quotient is None:
            return z, count
        z = quotient
        count += 1
