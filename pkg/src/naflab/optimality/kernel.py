"""Vectorised search for sums of two singletons whose w-NAF has weight > 2.

For y = c + Phi^n(d) the recoding emits one digit a for y / base^k and continues
with r = (y / base^k - a) / base^w. The w-NAF of y has weight at most 2 exactly
when r is 0 or a singleton value, so one residue lookup per step decides a pair.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from typing import Any

import numpy as np

from naflab.expansion import NumberSystem
from naflab.rings.base import Coords
from naflab.rings.factory import Ring

LOGGER = logging.getLogger(__name__)

BLOCK_ELEMENTS = 1 << 20
_COORD_LIMIT = 1 << 40


def batch_supported(sys: NumberSystem, shifts: Sequence[int]) -> bool:
    """Whether every shifted digit fits the int64 working range."""
    ring = sys.ring
    nonzero = sys.digit_set.nonzero_digits
    if not nonzero or not shifts:
        return True
    # the norm bounds every coordinate up to a factor depending only on (p, q)
    largest = max(ring.norm(d) for d in nonzero) * ring.base_norm ** max(shifts)
    return largest < _COORD_LIMIT


def _strip(ring: Ring, coords: Coords, active: np.ndarray) -> Coords:
    mask = active & ring.batch_divisible(coords)
    while mask.any():
        quotient = ring.batch_div_base(coords)
        coords = tuple(np.where(mask, new, old) for new, old in zip(quotient, coords, strict=True))
        mask = active & ring.batch_divisible(coords)
    return coords


def violations(ring: Ring, coords: Coords, w: int, table: Coords) -> np.ndarray:
    """Boolean mask of the sums whose w-NAF weight exceeds 2."""
    nonzero = ~ring.batch_is_zero(coords)
    stripped = _strip(ring, coords, nonzero)
    slot = ring.batch_residue_index(stripped, w)
    rest = tuple(value - column[slot] for value, column in zip(stripped, table, strict=True))
    for _ in range(w):
        rest = ring.batch_div_base(rest)
    rest_nonzero = ~ring.batch_is_zero(rest)
    rest = _strip(ring, rest, rest_nonzero)
    rest_slot = ring.batch_residue_index(rest, w)
    singleton = np.ones(rest_slot.shape, dtype=bool)
    for value, column in zip(rest, table, strict=True):
        singleton &= value == column[rest_slot]
    return nonzero & rest_nonzero & ~singleton


def first_violation(
    sys: NumberSystem,
    shifts: Sequence[int],
    *,
    block_elements: int = BLOCK_ELEMENTS,
) -> tuple[Any, Any, int] | None:
    """First (c, d, n) in (digit order, digit order, shift) order with weight > 2."""
    ring = sys.ring
    nonzero = sys.digit_set.nonzero_digits
    if not nonzero or not shifts:
        return None
    size = len(nonzero)
    base = ring.to_coords(nonzero)
    shifted = [ring.to_coords([ring.shift(d, n) for d in nonzero]) for n in shifts]
    table = sys.digit_set.residue_table()
    rows = max(1, block_elements // (size * len(shifts)))
    LOGGER.debug(
        "Batch search for %s: %s digits, shifts %s, %s rows per block",
        sys.label,
        size,
        list(shifts),
        rows,
    )
    for start in range(0, size, rows):
        stop = min(size, start + rows)
        masks = []
        for other in shifted:
            sums = tuple(
                own[start:stop, None] + moved[None, :]
                for own, moved in zip(base, other, strict=True)
            )
            masks.append(violations(ring, sums, sys.w, table))
        stacked = np.stack(masks, axis=-1)
        if stacked.any():
            i, j, t = np.unravel_index(int(np.argmax(stacked)), stacked.shape)
            return nonzero[start + int(i)], nonzero[int(j)], shifts[int(t)]
    return None
