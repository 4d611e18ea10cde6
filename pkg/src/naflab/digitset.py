"""Digit sets modulo base**w: minimal norm representatives and the integer case."""

from __future__ import annotations

import logging
import time
from collections.abc import Mapping
from dataclasses import dataclass
from typing import Any

import numpy as np

from naflab.rings.base import Coords, SystemKind, residue_index
from naflab.rings.factory import Ring
from naflab.rings.integer import IntegerRing
from naflab.rings.quadratic import QuadraticRing
from naflab.voronoi import ScaledCell, build_cell, lattice_ball
from naflab.ztau import ZERO, TauParams

LOGGER = logging.getLogger(__name__)

DEFAULT_DIGIT_CAP = 100_000


class DigitSetTooLargeError(ValueError):
    """Raised before building a digit set larger than the configured cap."""


class DigitSetConstructionError(RuntimeError):
    """Raised when a built digit set violates the one-digit-per-class property."""


class MalformedResidueKeyError(ValueError):
    """Raised for residue keys of the wrong length or with out-of-range entries."""


def expected_size(modulus: int, w: int) -> int:
    """Number of digits including 0: modulus^w - modulus^(w-1) + 1."""
    return modulus**w - modulus ** (w - 1) + 1


@dataclass(frozen=True, slots=True, eq=False)
class DigitSet:
    ring: Ring
    w: int
    digits: tuple[Any, ...]
    residue_index: Mapping[tuple[int, ...], int]
    members: frozenset[Any]

    @property
    def kind(self) -> SystemKind:
        return self.ring.kind

    @property
    def nonzero_digits(self) -> tuple[Any, ...]:
        return self.digits[1:]

    def __len__(self) -> int:
        return len(self.digits)

    def contains(self, digit: Any) -> bool:
        return digit in self.members

    def digit_for_residue(self, key: tuple[int, ...]) -> Any | None:
        return digit_for_residue(self, key)

    def residue_table(self) -> Coords:
        """Digit coordinates indexed by the mixed-radix residue index.

        Classes divisible by the base have no digit and hold zeros.
        """
        modulus = self.ring.modulus
        size = modulus**self.w
        packed = self.ring.to_coords(self.digits)
        tables = tuple(np.zeros(size, dtype=np.int64) for _ in packed)
        for key, position in self.residue_index.items():
            slot = residue_index(key, modulus)
            for table, column in zip(tables, packed, strict=True):
                table[slot] = column[position]
        return tables


def _check_cap(modulus: int, w: int, digit_cap: int | None, label: str) -> int:
    expected = expected_size(modulus, w)
    if digit_cap is not None and expected > digit_cap:
        raise DigitSetTooLargeError(
            f"digit set for {label}, w={w} would hold {expected} digits (cap {digit_cap})"
        )
    return expected


def _assemble(ring: Ring, w: int, digits: list[Any], expected: int) -> DigitSet:
    index: dict[tuple[int, ...], int] = {}
    for position, digit in enumerate(digits[1:], start=1):
        key = ring.residue_key(digit, w)
        if key[0] == 0:
            raise DigitSetConstructionError(f"digit {digit} is divisible by the base")
        if key in index:
            raise DigitSetConstructionError(
                f"digits {digits[index[key]]} and {digit} share a residue class "
                f"for {ring.label}, w={w}"
            )
        index[key] = position
    if len(digits) != expected:
        raise DigitSetConstructionError(
            f"digit set for {ring.label}, w={w} has {len(digits)} digits, expected {expected}"
        )
    return DigitSet(
        ring=ring,
        w=w,
        digits=tuple(digits),
        residue_index=index,
        members=frozenset(digits),
    )


def build_min_norm(
    params: TauParams,
    w: int,
    *,
    digit_cap: int | None = DEFAULT_DIGIT_CAP,
) -> DigitSet:
    """Minimal norm representatives modulo tau**w, 0 included."""
    params.require_expanding()
    if w < 2:
        raise ValueError(f"-w must be at least 2, got {w}")
    ring = QuadraticRing(params)
    expected = _check_cap(params.q, w, digit_cap, ring.label)
    started = time.perf_counter()
    cell = build_cell(params)
    scaled = ScaledCell.build(cell, w)
    digits: list[Any] = [ZERO]
    q = params.q
    for z in lattice_ball(params, q**w * cell.circumradius_sq):
        if z.a % q == 0:
            continue
        if scaled.contains_restricted(z):
            digits.append(z)
    digit_set = _assemble(ring, w, digits, expected)
    LOGGER.info(
        "Built digit set for %s w=%s: %s digits in %.2fs",
        ring.label,
        w,
        len(digit_set),
        time.perf_counter() - started,
    )
    return digit_set


def build_integer_digit_set(
    b: int,
    w: int,
    *,
    digit_cap: int | None = DEFAULT_DIGIT_CAP,
) -> DigitSet:
    """0 and all d with |d| < |b|^w / 2 not divisible by b."""
    ring = IntegerRing(b)
    if w < 2:
        raise ValueError(f"-w must be at least 2, got {w}")
    modulus = ring.modulus
    expected = _check_cap(modulus, w, digit_cap, ring.label)
    half_width = (modulus**w - 1) // 2
    digits: list[Any] = [0]
    digits.extend(d for d in range(-half_width, half_width + 1) if d % modulus)
    return _assemble(ring, w, digits, expected)


def build_digit_set(ring: Ring, w: int, *, digit_cap: int | None = DEFAULT_DIGIT_CAP) -> DigitSet:
    if isinstance(ring, QuadraticRing):
        return build_min_norm(ring.params, w, digit_cap=digit_cap)
    return build_integer_digit_set(ring.base, w, digit_cap=digit_cap)


def digit_for_residue(ds: DigitSet, key: tuple[int, ...]) -> Any | None:
    """The digit of the class named by ``key``; None for classes divisible by the base."""
    modulus = ds.ring.modulus
    if len(key) != ds.w or any(not 0 <= r < modulus for r in key):
        raise MalformedResidueKeyError(
            f"residue key {key!r} needs {ds.w} entries in [0, {modulus})"
        )
    if key[0] == 0:
        return None
    position = ds.residue_index.get(tuple(key))
    if position is None:
        raise DigitSetConstructionError(f"no digit for residue key {key!r}")
    return ds.digits[position]

