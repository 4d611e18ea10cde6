from fractions import Fraction

import pytest
import sympy

from naflab.arith import QuadSurd, surd_sign
from naflab.digitset import expected_size
from naflab.expansion import NumberSystem
from naflab.optimality.bounds import (
    analytic_condition,
    analytic_conditions,
    below_one,
    bound_report,
    tsq,
    tsq_weak,
    weak_list,
    weak_region_contains,
)
from naflab.optimality.subadditivity import check_subadditive
from naflab.ztau import TauParams


def _to_sympy(value: QuadSurd) -> sympy.Expr:
    rat = sympy.Rational(value.rat.numerator, value.rat.denominator)
    irr = sympy.Rational(value.irr.numerator, value.irr.denominator)
    return rat + irr * sympy.sqrt(value.q)


def test_tsq_at_the_boundary_case() -> None:
    value = tsq(TauParams(4, 9), 3)

    assert value == QuadSurd.rational(Fraction(242, 243), 9)
    assert below_one(value)


@pytest.mark.parametrize("q", [10, 11, 16, 25, 40])
def test_tsq_closed_form_for_trace_six(q: int) -> None:
    expected = 1 - Fraction(4, q) - Fraction(28, q**2) - Fraction(32, q**3)

    assert tsq(TauParams(6, q), 3) == QuadSurd.rational(expected, q)


@pytest.mark.parametrize("q", [3, 5, 7, 9, 13])
def test_tsq_closed_form_for_trace_three_width_four(q: int) -> None:
    s = sympy.Integer(q)
    closed = 4 * (s - 2) ** 2 * (s ** sympy.Rational(3, 2) + 2) ** 2 / (s**4 * (4 * s - 9))

    assert sympy.simplify(_to_sympy(tsq(TauParams(3, q), 4)) - closed) == 0


def test_tsq_perfect_square_value() -> None:
    assert tsq(TauParams(3, 9), 4) == QuadSurd.rational(Fraction(164836, 177147), 9)


@pytest.mark.parametrize(("p", "q", "w"), [(3, 3, 2), (0, 5, 3), (4, 9, 3), (-1, 2, 6), (5, 7, 4)])
def test_weak_bound_is_never_larger(p: int, q: int, w: int) -> None:
    params = TauParams(p, q)

    assert surd_sign(tsq(params, w) - tsq_weak(params, w)) > 0


@pytest.mark.parametrize(
    ("p", "q", "w", "expected"),
    [
        (3, 3, 4, ("i",)),
        (-7, 13, 5, ("i",)),
        (5, 7, 3, ("ii",)),
        (4, 9, 3, ("iii",)),
        (4, 10, 3, ()),
        (8, 17, 2, ("iv",)),
        (4, 5, 2, ()),
        (5, 7, 2, ("v",)),
        (3, 3, 2, ()),
        (2, 2, 5, ()),
    ],
)
def test_analytic_conditions(p: int, q: int, w: int, expected: tuple[str, ...]) -> None:
    params = TauParams(p, q)

    assert analytic_conditions(params, w) == expected
    assert analytic_condition(params, w) == bool(expected)


@pytest.mark.parametrize(
    ("p", "q", "w", "expected"),
    [
        (3, 3, 3, True),
        (-2, 2, 7, True),
        (4, 5, 2, True),
        (3, 7, 2, True),
        (0, 4, 4, True),
        (1, 2, 7, False),
        (2, 2, 6, False),
        (1, 3, 4, False),
    ],
)
def test_weak_region(p: int, q: int, w: int, expected: bool) -> None:
    assert weak_region_contains(TauParams(p, q), w) is expected


def test_weak_list_contains_the_region_corners() -> None:
    corners = weak_list()

    assert len(corners) == 11
    assert {(3, 3, 3), (2, 2, 7), (4, 5, 2), (3, 7, 2)} <= set(corners)
    corners.clear()
    assert weak_list()


def test_bound_report() -> None:
    report = bound_report(TauParams(4, 9), 3)

    assert report.tsq_below_one
    assert report.tsq_weak_below_one
    assert report.analytic
    assert report.conditions == ("iii",)


def test_width_below_two_is_rejected() -> None:
    with pytest.raises(ValueError, match="-w"):
        tsq(TauParams(3, 3), 1)
    with pytest.raises(ValueError, match="-w"):
        tsq_weak(TauParams(3, 3), 0)


def _grid(p_max: int, q_max: int, widths: range, cap: int) -> list[tuple[int, int, int]]:
    return [
        (p, q, w)
        for p in range(-p_max, p_max + 1)
        for q in range(2, q_max + 1)
        if 4 * q > p * p
        for w in widths
        if expected_size(q, w) <= cap
    ]


@pytest.mark.parametrize(("p", "q", "w"), [(8, 17, 2), (5, 7, 2), (-5, 7, 2), (4, 9, 3)])
def test_analytic_condition_implies_optimality(p: int, q: int, w: int) -> None:
    assert analytic_condition(TauParams(p, q), w)
    assert check_subadditive(NumberSystem.quadratic(p, q, w)).optimal


@pytest.mark.slow
def test_analytic_condition_is_sound_on_the_grid() -> None:
    violations = [
        (p, q, w)
        for p, q, w in _grid(8, 20, range(2, 6), 20_000)
        if analytic_condition(TauParams(p, q), w)
        and not check_subadditive(NumberSystem.quadratic(p, q, w, digit_cap=20_000)).optimal
    ]

    assert violations == []
