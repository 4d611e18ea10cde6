import logging

import pytest

from naflab.logging_setup import worker_initializer
from naflab.optimality import sweep
from naflab.optimality.sweep import (
    THREADS_ENV,
    MapRow,
    MapVerdict,
    decide_cell,
    map_grid,
    optimality_map,
    resolve_workers,
)


def test_map_grid_keeps_imaginary_cells_only() -> None:
    cells = list(map_grid(range(-2, 3), 3, [3, 2]))

    assert (2, 1, 2) not in cells
    assert (2, 2, 2) in cells
    assert (0, 2, 3) in cells
    assert all(4 * q > p * p for p, q, _ in cells)
    assert cells == sorted(cells)
    assert len(cells) == 5 * 2 * 2


def test_map_grid_drops_real_cases() -> None:
    cells = list(map_grid([4], 5, [2]))

    assert cells == [(4, 5, 2)]


def test_decide_cell_verdicts() -> None:
    assert decide_cell(3, 3, 2, 1000) == MapRow(3, 3, 2, MapVerdict.OPTIMAL)
    row = decide_cell(2, 2, 2, 1000)

    assert row.verdict is MapVerdict.NON_OPTIMAL
    assert row.witness_c
    assert row.witness_d
    assert row.witness_n is not None
    assert row.witness_weight is not None
    assert row.witness_weight >= 3


def test_decide_cell_skips_large_digit_sets() -> None:
    row = decide_cell(3, 3, 6, 100)

    assert row == MapRow(3, 3, 6, MapVerdict.SKIPPED)
    assert row.witness_n is None


def test_decide_cell_weak_mode() -> None:
    assert decide_cell(3, 3, 3, 1000, weak=True).verdict is MapVerdict.OPTIMAL


def test_optimality_map_rows_are_sorted() -> None:
    rows = optimality_map([2, -2, 0], 2, [3, 2], 1000)

    assert [(row.p, row.q, row.w) for row in rows] == [
        (-2, 2, 2),
        (-2, 2, 3),
        (0, 2, 2),
        (0, 2, 3),
        (2, 2, 2),
        (2, 2, 3),
    ]
    verdicts = {(row.p, row.w): row.verdict for row in rows}
    assert verdicts[(2, 2)] is MapVerdict.NON_OPTIMAL
    assert verdicts[(2, 3)] is MapVerdict.OPTIMAL
    assert verdicts[(0, 3)] is MapVerdict.NON_OPTIMAL


def test_optimality_map_uses_a_process_pool(mocker) -> None:
    executor = mocker.MagicMock()
    executor.__enter__.return_value = executor
    executor.map.side_effect = lambda fn, tasks: [fn(task) for task in tasks]
    pool = mocker.patch.object(sweep, "ProcessPoolExecutor", return_value=executor)

    rows = optimality_map([1], 2, [2, 3], 1000, workers=3)

    pool.assert_called_once_with(
        max_workers=3,
        initializer=worker_initializer,
        initargs=(logging.getLogger().getEffectiveLevel(),),
    )
    assert [row.verdict for row in rows] == [MapVerdict.OPTIMAL, MapVerdict.OPTIMAL]


def test_optimality_map_rejects_bad_ranges() -> None:
    with pytest.raises(ValueError, match="--q-max"):
        optimality_map([0], 1, [2], 1000)
    with pytest.raises(ValueError, match="-w"):
        optimality_map([0], 2, [0], 1000)
    with pytest.raises(ValueError, match="at least 2"):
        optimality_map([0], 2, [1, 2], 1000)


def test_resolve_workers(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setattr(sweep.os, "cpu_count", lambda: 8)

    assert resolve_workers(4, env={}) == 4
    assert resolve_workers(0, env={}) == 8
    assert resolve_workers(None, env={}) == 8
    assert resolve_workers(0, env={THREADS_ENV: "3"}) == 3
    assert resolve_workers(2, env={THREADS_ENV: " 6 "}) == 2


def test_resolve_workers_reads_the_process_environment(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv(THREADS_ENV, "1")

    assert resolve_workers(16) == 1


@pytest.mark.parametrize("raw", ["many", "0", "-2"])
def test_resolve_workers_rejects_bad_limits(raw: str) -> None:
    with pytest.raises(ValueError, match=THREADS_ENV):
        resolve_workers(2, env={THREADS_ENV: raw})
