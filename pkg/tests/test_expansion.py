import numpy as np
import pytest

from naflab import expansion
from naflab.digitset import DigitSet
from naflab.expansion import (
    Expansion,
    ExpansionLimitError,
    MultiExpansion,
    NumberSystem,
    Singleton,
    describe,
    is_singleton_value,
    is_wnaf,
    random_wnaf,
    value,
    wnaf_expand,
)
from naflab.ztau import ZTauElem


def test_gaussian_2naf_of_i() -> None:
    sys = NumberSystem.quadratic(2, 2, 2)
    i = ZTauElem(-1, 1)

    result = wnaf_expand(i, sys)

    assert result.terms == (
        (0, ZTauElem(1, -1)),
        (2, ZTauElem(-1, 0)),
        (4, ZTauElem(1, -1)),
    )
    assert value(result, sys) == i
    assert describe(result, sys) == "(1 - τ)τ^4 + (-1)τ^2 + (1 - τ)τ^0"


def test_integer_naf_of_seven() -> None:
    sys = NumberSystem.integer(2, 2)

    result = wnaf_expand(7, sys)

    assert result.to_pairs() == [(-1, 0), (1, 3)]
    assert describe(result, sys) == "(1)(2)^3 + (-1)(2)^0"


def test_zero_has_the_empty_expansion() -> None:
    sys = NumberSystem.quadratic(3, 3, 3)

    result = wnaf_expand(ZTauElem(0, 0), sys)

    assert result.weight == 0
    assert result.highest_exponent == -1
    assert describe(result, sys) == "0"


@pytest.mark.parametrize(
    ("kind", "args"),
    [
        ("quadratic", (3, 3, 2)),
        ("quadratic", (-3, 3, 4)),
        ("quadratic", (1, 2, 3)),
        ("quadratic", (2, 2, 5)),
        ("quadratic", (0, 5, 3)),
        ("quadratic", (4, 5, 2)),
        ("integer", (2, 3)),
        ("integer", (-2, 2)),
        ("integer", (10, 2)),
        ("integer", (3, 4)),
    ],
)
def test_recoding_round_trips_random_elements(kind: str, args: tuple[int, ...]) -> None:
    sys = getattr(NumberSystem, kind)(*args)
    rng = np.random.default_rng(7)
    ring = sys.ring

    for _ in range(200):
        coords = rng.integers(-10_000, 10_001, size=2)
        z = ring.from_coords(coords) if kind == "quadratic" else int(coords[0])
        result = wnaf_expand(z, sys)
        assert value(result, sys) == z
        assert is_wnaf(result, sys.w)
        assert all(sys.digit_set.contains(d) and not ring.is_zero(d) for _, d in result.terms)


def test_random_wnaf_is_its_own_recoding() -> None:
    sys = NumberSystem.quadratic(-1, 2, 4)
    rng = np.random.default_rng(11)

    for _ in range(100):
        drawn = random_wnaf(sys, rng)
        assert is_wnaf(drawn, sys.w)
        assert wnaf_expand(value(drawn, sys), sys) == drawn


def test_is_wnaf_checks_the_gaps() -> None:
    one = ZTauElem(1, 0)

    assert is_wnaf(Expansion(), 3)
    assert is_wnaf(Expansion.from_pairs([(0, one), (3, one)]), 3)
    assert not is_wnaf(Expansion.from_pairs([(0, one), (2, one)]), 3)


def test_expansion_rejects_bad_exponents() -> None:
    with pytest.raises(ValueError, match="twice"):
        Expansion.from_pairs([(1, 1), (1, -1)])
    with pytest.raises(ValueError, match="negative"):
        Expansion(((-1, 1),))
    with pytest.raises(ValueError, match="ascending"):
        Expansion(((3, 1), (0, 1)))
    with pytest.raises(ValueError):
        Singleton(1, -2)


def test_multi_expansion_equality_ignores_order() -> None:
    sys = NumberSystem.integer(3, 2)
    first = MultiExpansion.of([(1, 0), (1, 0), (-1, 2)])
    second = MultiExpansion.of([Singleton(-1, 2), (1, 0), (1, 0)])

    assert first == second
    assert expansion.weight(first) == 3
    assert value(first, sys) == 2 - 9


def test_as_multi_preserves_the_value() -> None:
    sys = NumberSystem.integer(-2, 3)
    result = wnaf_expand(-1234, sys)

    assert value(result.as_multi(), sys) == -1234
    assert result.as_multi().weight == result.weight


def test_singleton_values() -> None:
    sys = NumberSystem.quadratic(3, 3, 2)
    tau_sq = sys.shift(ZTauElem(-2, 1), 2)

    assert is_singleton_value(tau_sq, sys)
    assert is_singleton_value(ZTauElem(1, 0), sys)
    assert not is_singleton_value(ZTauElem(0, 0), sys)
    assert not is_singleton_value(ZTauElem(2, 1), sys)


def test_recoding_cap_raises(mocker) -> None:
    sys = NumberSystem.integer(2, 2)
    mocker.patch.object(DigitSet, "digit_for_residue", return_value=0)

    with pytest.raises(ExpansionLimitError):
        wnaf_expand(5, sys)


@pytest.mark.slow
@pytest.mark.parametrize(
    ("kind", "args"),
    [
        ("quadratic", (3, 3, 4)),
        ("quadratic", (-1, 2, 5)),
        ("quadratic", (2, 2, 3)),
        ("quadratic", (0, 3, 3)),
        ("integer", (-2, 4)),
    ],
)
def test_round_trips_at_scale(kind: str, args: tuple[int, ...]) -> None:
    sys = getattr(NumberSystem, kind)(*args)
    rng = np.random.default_rng(2024)
    ring = sys.ring
    width = len(ring.to_coords([ring.zero]))

    for _ in range(10_000):
        raw = rng.integers(-(10**6), 10**6 + 1, size=width)
        z = ring.from_coords([int(c) for c in raw])
        assert value(wnaf_expand(z, sys), sys) == z
        drawn = random_wnaf(sys, rng)
        assert wnaf_expand(value(drawn, sys), sys) == drawn
