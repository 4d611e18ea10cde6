"""Exact sufficient conditions for (weak) w-subadditivity.

Both bounds compare the largest possible remainder after one recoding step
with the inscribed radius of tau**w * V; every value is an element of Q(sqrt(q)).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from naflab.arith import QuadSurd, surd_sign
from naflab.voronoi import circumradius_sq
from naflab.ztau import TauParams

# (|p|, q, w) corners of the parameter regions with a weak-subadditive digit set
WEAK_CRITICAL_POINTS: tuple[tuple[int, int, int], ...] = (
    (0, 10, 2),
    (0, 5, 3),
    (0, 4, 4),
    (0, 3, 5),
    (0, 2, 10),
    (1, 2, 8),
    (2, 3, 4),
    (2, 2, 7),
    (3, 7, 2),
    (3, 3, 3),
    (4, 5, 2),
)


def _require_width(w: int) -> None:
    if w < 2:
        raise ValueError(f"-w must be at least 2, got {w}")


def tsq(params: TauParams, w: int) -> QuadSurd:
    """Squared bound 4 (q^-1/2 + 2 q^-w/2)^2 |V|^2; below 1 implies optimality."""
    _require_width(w)
    q = params.q
    scale = 4 * circumradius_sq(params)
    rat = Fraction(1, q) + Fraction(4, q**w)
    irr = Fraction(0)
    # cross term 4 q^-(w+1)/2
    if w % 2:
        rat += Fraction(4, q ** ((w + 1) // 2))
    else:
        irr = Fraction(4, q ** (w // 2 + 1))
    return QuadSurd(rat * scale, irr * scale, q)


def tsq_weak(params: TauParams, w: int) -> QuadSurd:
    """Squared weak bound 4 (q^-1 + 2 q^-w/2)^2 |V|^2."""
    _require_width(w)
    q = params.q
    scale = 4 * circumradius_sq(params)
    rat = Fraction(1, q * q) + Fraction(4, q**w)
    irr = Fraction(0)
    # cross term 4 q^-(1 + w/2)
    if w % 2:
        irr = Fraction(4, q ** ((w + 3) // 2))
    else:
        rat += Fraction(4, q ** (w // 2 + 1))
    return QuadSurd(rat * scale, irr * scale, q)


def weak_list() -> list[tuple[int, int, int]]:
    return list(WEAK_CRITICAL_POINTS)


def below_one(value: QuadSurd) -> bool:
    return surd_sign(1 - value) > 0


def _small_window_factor(q: int) -> QuadSurd:
    """(1/sqrt(q) + 2/q)^2."""
    return QuadSurd(Fraction(1, q) + Fraction(4, q * q), Fraction(4, q * q), q)


def analytic_conditions(params: TauParams, w: int) -> tuple[str, ...]:
    """Labels of the sufficient conditions that hold, in order i..v."""
    abs_p = abs(params.p)
    q = params.q
    held: list[str] = []
    if w >= 4 and abs_p >= 3:
        held.append("i")
    if w == 3 and abs_p >= 5:
        held.append("ii")
    if w == 3 and abs_p == 4 and 5 <= q <= 9:
        held.append("iii")
    if w == 2:
        factor = _small_window_factor(q)
        msq = params.msq
        if params.p % 2 == 0:
            if below_one(factor * (msq + 1)):
                held.append("iv")
        elif below_one(factor * ((msq + Fraction(1, 4)) ** 2 / msq)):
            held.append("v")
    return tuple(held)


def analytic_condition(params: TauParams, w: int) -> bool:
    return bool(analytic_conditions(params, w))


def weak_region_contains(params: TauParams, w: int) -> bool:
    abs_p = abs(params.p)
    return any(
        abs_p >= p0 and params.q >= q0 and w >= w0 for p0, q0, w0 in WEAK_CRITICAL_POINTS
    )


@dataclass(frozen=True, slots=True)
class BoundReport:
    params: TauParams
    w: int
    tsq: QuadSurd
    tsq_weak: QuadSurd
    conditions: tuple[str, ...]
    weak_region: bool

    @property
    def tsq_below_one(self) -> bool:
        return below_one(self.tsq)

    @property
    def tsq_weak_below_one(self) -> bool:
        return below_one(self.tsq_weak)

    @property
    def analytic(self) -> bool:
        return bool(self.conditions)


def bound_report(params: TauParams, w: int) -> BoundReport:
    return BoundReport(
        params=params,
        w=w,
        tsq=tsq(params, w),
        tsq_weak=tsq_weak(params, w),
        conditions=analytic_conditions(params, w),
        weak_region=weak_region_contains(params, w),
    )
