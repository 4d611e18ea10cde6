import pytest

from naflab.expansion import NumberSystem, value, wnaf_expand
from naflab.optimality import oracle
from naflab.optimality.oracle import (
    MAX_ORACLE_WEIGHT,
    OracleBoundsError,
    default_max_exp,
    min_weight_multi_expansion,
    min_weight_oracle,
)
from naflab.voronoi import lattice_ball
from naflab.ztau import ZTauElem


def test_gaussian_element_with_a_shorter_multi_expansion() -> None:
    sys = NumberSystem.quadratic(2, 2, 2)
    z = ZTauElem(-1, -1)

    found = min_weight_multi_expansion(z, sys, max_exp=8)

    assert found is not None
    assert found.weight == 2
    assert value(found, sys) == z
    assert min_weight_oracle(z, sys, max_exp=8) == 2


def test_trivial_weights() -> None:
    sys = NumberSystem.quadratic(3, 3, 2)

    assert min_weight_oracle(ZTauElem(0, 0), sys) == 0
    assert min_weight_oracle(ZTauElem(-2, 1), sys) == 1
    assert min_weight_oracle(sys.shift(ZTauElem(1, -1), 3), sys) == 1
    assert min_weight_oracle(ZTauElem(-2, 1), sys, max_weight=0) is None


def test_integer_oracle() -> None:
    sys = NumberSystem.integer(2, 2)

    # 7 = 8 - 1
    assert min_weight_oracle(7, sys) == 2
    assert min_weight_oracle(0, sys) == 0
    assert min_weight_oracle(8, sys, max_exp=2) == 2
    assert min_weight_oracle(8, sys, max_weight=1, max_exp=2) is None


@pytest.mark.parametrize(("p", "q", "w"), [(3, 3, 2), (-3, 3, 3), (1, 2, 3), (2, 2, 3)])
def test_oracle_matches_the_wnaf_weight_for_optimal_systems(p: int, q: int, w: int) -> None:
    sys = NumberSystem.quadratic(p, q, w)

    for z in lattice_ball(sys.ring.params, 20):
        expected = wnaf_expand(z, sys).weight
        if expected <= 3:
            assert min_weight_oracle(z, sys, max_weight=3) == expected, z


def test_default_max_exp_covers_the_wnaf() -> None:
    sys = NumberSystem.quadratic(3, 3, 2)
    z = ZTauElem(17, -9)

    highest = wnaf_expand(z, sys).highest_exponent
    assert default_max_exp(z, sys) == highest + 2 * 2 + 4
    assert default_max_exp(ZTauElem(0, 0), sys, extra_exponents=0) == 4


@pytest.mark.parametrize(
    ("kwargs", "flag"),
    [
        ({"max_weight": MAX_ORACLE_WEIGHT + 1}, "--max-weight"),
        ({"max_weight": -1}, "--max-weight"),
        ({"max_exp": -1}, "--max-exp"),
    ],
)
def test_bounds_are_validated(kwargs: dict[str, int], flag: str) -> None:
    sys = NumberSystem.quadratic(3, 3, 2)

    with pytest.raises(OracleBoundsError, match=flag):
        min_weight_oracle(ZTauElem(1, 1), sys, **kwargs)


def test_pair_table_limit(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setattr(oracle, "PAIR_TABLE_LIMIT", 10)
    sys = NumberSystem.quadratic(3, 3, 2)
    far = sys.ring.add(sys.shift(ZTauElem(1, 0), 12), ZTauElem(1, 0))
    far = sys.ring.add(far, sys.shift(ZTauElem(1, 0), 6))

    with pytest.raises(OracleBoundsError, match="pair sums"):
        min_weight_oracle(far, sys, max_weight=3, max_exp=12)
