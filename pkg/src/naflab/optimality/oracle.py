"""Bounded exhaustive search for minimal-weight multi-expansions.

Sums of up to four singleton values are matched against the target by meeting
in the middle: the target minus a sum of floor(W/2) singletons is looked up in
the table of sums of ceil(W/2) singletons.
"""

from __future__ import annotations

import logging
from typing import Any

from naflab.expansion import MultiExpansion, NumberSystem, Singleton, wnaf_expand

LOGGER = logging.getLogger(__name__)

MAX_ORACLE_WEIGHT = 4
PAIR_TABLE_LIMIT = 5_000_000


class OracleBoundsError(ValueError):
    """Raised for search bounds outside the supported range."""


def default_max_exp(z: Any, sys: NumberSystem, *, extra_exponents: int = 4) -> int:
    """Highest exponent of the w-NAF of z plus 2w + extra_exponents."""
    highest = wnaf_expand(z, sys).highest_exponent
    return max(highest, 0) + 2 * sys.w + extra_exponents


def _singletons(sys: NumberSystem, max_exp: int) -> dict[Any, Singleton]:
    table: dict[Any, Singleton] = {}
    for exponent in range(max_exp + 1):
        for digit in sys.digit_set.nonzero_digits:
            table.setdefault(sys.shift(digit, exponent), Singleton(digit, exponent))
    return table


def _pair_sums(
    sys: NumberSystem, singles: dict[Any, Singleton]
) -> dict[Any, tuple[Singleton, ...]]:
    size = len(singles)
    if size * (size + 1) // 2 > PAIR_TABLE_LIMIT:
        raise OracleBoundsError(
            f"--max-exp: {size} singletons give more than {PAIR_TABLE_LIMIT} pair sums"
        )
    ring = sys.ring
    entries = list(singles.items())
    pairs: dict[Any, tuple[Singleton, ...]] = {}
    for i, (left_value, left) in enumerate(entries):
        for right_value, right in entries[i:]:
            pairs.setdefault(ring.add(left_value, right_value), (left, right))
    LOGGER.debug("%s: %s pair sums from %s singletons", sys.label, len(pairs), size)
    return pairs


def min_weight_multi_expansion(
    z: Any,
    sys: NumberSystem,
    *,
    max_weight: int = MAX_ORACLE_WEIGHT,
    max_exp: int | None = None,
) -> MultiExpansion | None:
    """A multi-expansion of z of least weight, or None when none exists within bounds."""
    if not 0 <= max_weight <= MAX_ORACLE_WEIGHT:
        raise OracleBoundsError(
            f"--max-weight must be between 0 and {MAX_ORACLE_WEIGHT}, got {max_weight}"
        )
    if max_exp is None:
        max_exp = default_max_exp(z, sys)
    if max_exp < 0:
        raise OracleBoundsError(f"--max-exp must be non-negative, got {max_exp}")
    ring = sys.ring
    if ring.is_zero(z):
        return MultiExpansion()
    singles = _singletons(sys, max_exp)
    if max_weight >= 1 and z in singles:
        return MultiExpansion.of([singles[z]])
    if max_weight >= 2:
        for value, single in singles.items():
            other = singles.get(ring.sub(z, value))
            if other is not None:
                return MultiExpansion.of([single, other])
    if max_weight < 3:
        return None
    pairs = _pair_sums(sys, singles)
    for value, single in singles.items():
        found = pairs.get(ring.sub(z, value))
        if found is not None:
            return MultiExpansion.of([single, *found])
    if max_weight < 4:
        return None
    for value, pair in pairs.items():
        found = pairs.get(ring.sub(z, value))
        if found is not None:
            return MultiExpansion.of([*pair, *found])
    return None


def min_weight_oracle(
    z: Any,
    sys: NumberSystem,
    *,
    max_weight: int = MAX_ORACLE_WEIGHT,
    max_exp: int | None = None,
) -> int | None:
    """Least weight of a multi-expansion of z; None means unknown within the bounds."""
    found = min_weight_multi_expansion(z, sys, max_weight=max_weight, max_exp=max_exp)
    return None if found is None else found.weight
