import pytest

from naflab import ztau
from naflab.digitset import (
    DigitSetTooLargeError,
    MalformedResidueKeyError,
    build_digit_set,
    build_integer_digit_set,
    build_min_norm,
    digit_for_residue,
    expected_size,
)
from naflab.rings import create_ring
from naflab.rings.base import residue_index
from naflab.voronoi import build_cell, in_restricted_scaled, lattice_ball
from naflab.ztau import TauParams, ZTauElem


def _coords(digits) -> set[tuple[int, int]]:
    return {(d.a, d.b) for d in digits}


def test_koblitz_char3_width2_digits() -> None:
    digit_set = build_min_norm(TauParams(3, 3), 2)

    # {0, +-1, +-(tau - 1), +-(tau - 2)}
    assert _coords(digit_set.digits) == {
        (0, 0),
        (1, 0),
        (-1, 0),
        (-1, 1),
        (1, -1),
        (-2, 1),
        (2, -1),
    }
    assert digit_set.digits[0] == ztau.ZERO


def test_gaussian_width3_digits_are_the_units() -> None:
    digit_set = build_min_norm(TauParams(2, 2), 3)

    assert _coords(digit_set.digits) == {(0, 0), (1, 0), (-1, 0), (-1, 1), (1, -1)}


def test_width2_digits_for_tau_one_plus_i() -> None:
    digit_set = build_min_norm(TauParams(2, 2), 2)

    assert _coords(digit_set.digits) == {(0, 0), (-1, 0), (1, -1)}


def test_koblitz_char2_width2_digits() -> None:
    digit_set = build_min_norm(TauParams(1, 2), 2)

    assert _coords(digit_set.digits) == {(0, 0), (1, 0), (-1, 0)}


@pytest.mark.parametrize(
    ("p", "q", "w"),
    [
        (3, 3, 3),
        (-3, 3, 4),
        (1, 2, 5),
        (-1, 2, 6),
        (2, 2, 6),
        (0, 2, 5),
        (0, 5, 3),
        (4, 5, 2),
        (3, 7, 2),
        (-5, 7, 3),
        (1, 3, 4),
        (0, 3, 4),
    ],
)
def test_quadratic_digit_sets_are_complete_residue_systems(p: int, q: int, w: int) -> None:
    params = TauParams(p, q)
    digit_set = build_min_norm(params, w)
    cell = build_cell(params)

    assert len(digit_set) == expected_size(q, w) == q**w - q ** (w - 1) + 1
    keys = {ztau.residue_key(d, w, params) for d in digit_set.nonzero_digits}
    assert len(keys) == len(digit_set) - 1
    assert all(key[0] != 0 for key in keys)
    assert all(in_restricted_scaled(d, w, cell) for d in digit_set.nonzero_digits)


@pytest.mark.parametrize(("b", "w"), [(2, 2), (2, 5), (3, 2), (3, 3), (-2, 4), (10, 2), (-5, 3)])
def test_integer_digit_sets(b: int, w: int) -> None:
    digit_set = build_integer_digit_set(b, w)
    bound = abs(b) ** w

    assert len(digit_set) == expected_size(abs(b), w)
    assert all(2 * abs(d) < bound and d % b for d in digit_set.nonzero_digits)


def test_integer_naf_digits() -> None:
    assert set(build_integer_digit_set(2, 2).digits) == {0, 1, -1}
    assert set(build_integer_digit_set(2, 3).digits) == {0, 1, -1, 3, -3}


def test_digit_cap_is_checked_before_enumeration() -> None:
    ring = create_ring(p=3, q=3)

    with pytest.raises(DigitSetTooLargeError, match="cap 100"):
        build_digit_set(ring, 6, digit_cap=100)
    assert len(build_digit_set(ring, 2, digit_cap=None)) == 7


def test_width_below_two_is_rejected() -> None:
    with pytest.raises(ValueError, match="-w"):
        build_min_norm(TauParams(3, 3), 1)
    with pytest.raises(ValueError, match="-w"):
        build_integer_digit_set(2, 1)


def test_digit_for_residue_lookup() -> None:
    params = TauParams(3, 3)
    digit_set = build_min_norm(params, 3)
    for digit in digit_set.nonzero_digits:
        key = ztau.residue_key(digit, 3, params)
        assert digit_for_residue(digit_set, key) == digit
        assert digit_set.digit_for_residue(key) == digit

    assert digit_for_residue(digit_set, (0, 1, 2)) is None
    with pytest.raises(MalformedResidueKeyError):
        digit_for_residue(digit_set, (1, 2))
    with pytest.raises(MalformedResidueKeyError):
        digit_for_residue(digit_set, (3, 0, 0))


def test_residue_table_is_indexed_by_mixed_radix_key() -> None:
    ring = create_ring(p=1, q=2)
    digit_set = build_digit_set(ring, 4)
    a_column, b_column = digit_set.residue_table()

    assert a_column.shape == (16,)
    for digit in digit_set.nonzero_digits:
        slot = residue_index(ring.residue_key(digit, 4), 2)
        assert ZTauElem(int(a_column[slot]), int(b_column[slot])) == digit


def test_contains_and_nonzero_digits() -> None:
    digit_set = build_min_norm(TauParams(3, 3), 2)

    assert digit_set.contains(ZTauElem(-2, 1))
    assert not digit_set.contains(ZTauElem(2, 1))
    assert ztau.ZERO not in digit_set.nonzero_digits


@pytest.mark.parametrize(("p", "q", "w"), [(3, 3, 2), (2, 2, 3), (1, 2, 4), (0, 5, 2), (5, 7, 2)])
def test_digits_have_minimal_norm_in_their_class(p: int, q: int, w: int) -> None:
    params = TauParams(p, q)
    digit_set = build_min_norm(params, w)
    modulus = ztau.tau_power(w, params)
    shifts = [ztau.mul(modulus, y, params) for y in lattice_ball(params, 6)]

    for digit in digit_set.nonzero_digits:
        norm = ztau.norm_sq(digit, params)
        assert all(norm <= ztau.norm_sq(ztau.sub(digit, s), params) for s in shifts), digit


@pytest.mark.parametrize(
    ("p", "q", "w"),
    [(3, 3, 2), (3, 3, 3), (-3, 3, 2), (1, 2, 4), (-1, 2, 3), (1, 3, 3), (2, 2, 3), (5, 7, 2)],
)
def test_digit_set_is_closed_under_negation(p: int, q: int, w: int) -> None:
    digit_set = build_min_norm(TauParams(p, q), w)

    assert all(digit_set.contains(ztau.neg(d)) for d in digit_set.digits)


@pytest.mark.parametrize(("p", "q", "w"), [(2, 2, 2), (0, 2, 2), (-2, 2, 2)])
def test_self_inverse_classes_break_negation_symmetry(p: int, q: int, w: int) -> None:
    params = TauParams(p, q)
    digit_set = build_min_norm(params, w)
    lonely = [d for d in digit_set.nonzero_digits if not digit_set.contains(ztau.neg(d))]

    assert lonely
    for digit in lonely:
        assert ztau.residue_key(ztau.neg(digit), w, params) == ztau.residue_key(digit, w, params)


@pytest.mark.parametrize(("p", "q", "w"), [(2, 2, 2), (0, 2, 2), (4, 5, 2), (3, 3, 3)])
def test_negated_class_has_a_digit_of_equal_norm(p: int, q: int, w: int) -> None:
    params = TauParams(p, q)
    digit_set = build_min_norm(params, w)

    for digit in digit_set.nonzero_digits:
        partner = digit_set.digit_for_residue(ztau.residue_key(ztau.neg(digit), w, params))
        assert ztau.norm_sq(partner, params) == ztau.norm_sq(digit, params)
