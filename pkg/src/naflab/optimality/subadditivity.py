"""Deciding w-NAF optimality through (weak) w-subadditivity of the digit set."""

from __future__ import annotations

import logging
import time
from collections.abc import Sequence
from dataclasses import dataclass
from enum import StrEnum
from typing import Any

from naflab.arith import QuadSurd, ceil_sqrt, surd_sign
from naflab.expansion import Expansion, NumberSystem, is_singleton_value, wnaf_expand
from naflab.optimality import kernel

LOGGER = logging.getLogger(__name__)


class Engine(StrEnum):
    """``reference`` runs the literal pair loop; ``batch`` prechecks and vectorises."""

    BATCH = "batch"
    REFERENCE = "reference"


@dataclass(frozen=True, slots=True)
class Witness:
    """c + Phi^n(d) has a w-NAF of weight >= 3 although {(c,0),(d,n)} has weight 2."""

    c: Any
    d: Any
    n: int
    sum_wnaf: Expansion

    @property
    def weight(self) -> int:
        return self.sum_wnaf.weight


@dataclass(frozen=True, slots=True)
class Verdict:
    optimal: bool
    witness: Witness | None = None

    def __post_init__(self) -> None:
        if self.optimal == (self.witness is not None):
            raise ValueError("a verdict carries a witness exactly when it is non-optimal")


def _witness(sys: NumberSystem, c: Any, d: Any, n: int) -> Witness:
    total = sys.ring.add(c, sys.shift(d, n))
    return Witness(c=c, d=d, n=n, sum_wnaf=wnaf_expand(total, sys))


def remainder_bound(sys: NumberSystem, n: int) -> QuadSurd:
    """(2 + |base|^n)^2 |V|^2, the squared bound on the remainder after one digit."""
    ring = sys.ring
    base_norm = ring.base_norm
    radius_sq = ring.cell_radius_sq
    half, odd = divmod(n, 2)
    root_power = QuadSurd.rational(base_norm**half, base_norm)
    if odd:
        root_power = root_power * QuadSurd.root(base_norm)
    return (4 + base_norm**n) * radius_sq + 4 * radius_sq * root_power


def shift_is_safe(sys: NumberSystem, n: int) -> bool:
    """True when every possible remainder for shift n is 0 or a singleton value."""
    ring = sys.ring
    bound = remainder_bound(sys, n)
    root_ceiling = ceil_sqrt(ring.base_norm**n)
    enclosing = (2 + root_ceiling) ** 2 * ring.cell_radius_sq
    for r in ring.ball(enclosing):
        if ring.is_zero(r) or surd_sign(bound - ring.norm(r)) < 0:
            continue
        if not is_singleton_value(r, sys):
            return False
    return True


def _reference_search(sys: NumberSystem, shifts: Sequence[int]) -> tuple[Any, Any, int] | None:
    ring = sys.ring
    nonzero = sys.digit_set.nonzero_digits
    shifted = {n: [sys.shift(d, n) for d in nonzero] for n in shifts}
    for c in nonzero:
        for j, d in enumerate(nonzero):
            for n in shifts:
                total = ring.add(c, shifted[n][j])
                if wnaf_expand(total, sys).weight > 2:
                    return c, d, n
    return None


def _batch_search(sys: NumberSystem, shifts: Sequence[int]) -> tuple[Any, Any, int] | None:
    pending = [n for n in shifts if not shift_is_safe(sys, n)]
    LOGGER.debug("%s: shifts needing a search: %s of %s", sys.label, pending, list(shifts))
    if not pending:
        return None
    if kernel.batch_supported(sys, pending):
        return kernel.first_violation(sys, pending)
    LOGGER.info("%s: coordinates exceed the batch range; using the reference loop", sys.label)
    return _reference_search(sys, pending)


def _decide(sys: NumberSystem, shifts: Sequence[int], engine: Engine | str) -> Verdict:
    started = time.perf_counter()
    if Engine(engine) is Engine.REFERENCE:
        found = _reference_search(sys, shifts)
    else:
        found = _batch_search(sys, shifts)
    if found is None:
        verdict = Verdict(optimal=True)
    else:
        verdict = Verdict(optimal=False, witness=_witness(sys, *found))
    LOGGER.info(
        "%s shifts %s: %s in %.2fs",
        sys.label,
        f"0..{shifts[-1]}" if shifts else "none",
        "optimal" if verdict.optimal else "non-optimal",
        time.perf_counter() - started,
    )
    return verdict


def check_subadditive(sys: NumberSystem, *, engine: Engine | str = Engine.BATCH) -> Verdict:
    """Decide w-subadditivity, equivalently optimality of every w-NAF expansion."""
    return _decide(sys, list(range(sys.w)), engine)


def check_weak_subadditive(sys: NumberSystem, *, engine: Engine | str = Engine.BATCH) -> Verdict:
    """Same search restricted to shifts 0..w-2.

    A positive answer yields an optimal (w-1)-NAF over this digit set for every
    element, not optimality of the w-NAF itself.
    """
    if sys.w < 2:
        raise ValueError(f"-w must be at least 2, got {sys.w}")
    return _decide(sys, list(range(sys.w - 1)), engine)
