"""Optimality maps over grids of (p, q, w)."""

from __future__ import annotations

import logging
import os
from collections.abc import Iterable, Iterator, Mapping
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import StrEnum

from naflab.digitset import expected_size
from naflab.expansion import NumberSystem
from naflab.logging_setup import worker_initializer
from naflab.optimality.subadditivity import check_subadditive, check_weak_subadditive

LOGGER = logging.getLogger(__name__)

THREADS_ENV = "NAFLAB_THREADS"


class MapVerdict(StrEnum):
    OPTIMAL = "O"
    NON_OPTIMAL = "N"
    SKIPPED = "skipped"


@dataclass(frozen=True, slots=True)
class MapRow:
    """One grid cell; witness fields are empty unless the verdict is N."""

    p: int
    q: int
    w: int
    verdict: MapVerdict
    witness_c: str = ""
    witness_d: str = ""
    witness_n: int | None = None
    witness_weight: int | None = None


def map_grid(
    p_range: Iterable[int], q_max: int, w_range: Iterable[int]
) -> Iterator[tuple[int, int, int]]:
    """Cells (p, q, w) with q >= 2 and 4q > p^2, sorted by (p, q, w)."""
    widths = sorted(set(w_range))
    for p in sorted(set(p_range)):
        for q in range(2, q_max + 1):
            if 4 * q <= p * p:
                continue
            for w in widths:
                yield p, q, w


def decide_cell(p: int, q: int, w: int, digit_cap: int, weak: bool = False) -> MapRow:
    if expected_size(q, w) > digit_cap:
        LOGGER.debug("p=%s,q=%s,w=%s: digit set above cap %s; skipped", p, q, w, digit_cap)
        return MapRow(p, q, w, MapVerdict.SKIPPED)
    sys = NumberSystem.quadratic(p, q, w, digit_cap=digit_cap)
    verdict = check_weak_subadditive(sys) if weak else check_subadditive(sys)
    if verdict.witness is None:
        return MapRow(p, q, w, MapVerdict.OPTIMAL)
    witness = verdict.witness
    ring = sys.ring
    return MapRow(
        p,
        q,
        w,
        MapVerdict.NON_OPTIMAL,
        witness_c=ring.format_element(witness.c),
        witness_d=ring.format_element(witness.d),
        witness_n=witness.n,
        witness_weight=witness.weight,
    )


def _decide_task(task: tuple[int, int, int, int, bool]) -> MapRow:
    return decide_cell(*task)


def resolve_workers(configured: int | None, env: Mapping[str, str] | None = None) -> int:
    """Worker count: configured value (0/None = CPU count), capped by NAFLAB_THREADS."""
    env = os.environ if env is None else env
    workers = configured if configured and configured > 0 else (os.cpu_count() or 1)
    raw = env.get(THREADS_ENV, "").strip()
    if raw:
        try:
            limit = int(raw)
        except ValueError as exc:
            raise ValueError(f"{THREADS_ENV} must be an integer, got {raw!r}") from exc
        if limit < 1:
            raise ValueError(f"{THREADS_ENV} must be at least 1, got {limit}")
        workers = min(workers, limit)
    return workers


def optimality_map(
    p_range: Iterable[int],
    q_max: int,
    w_range: Iterable[int],
    digit_cap: int,
    *,
    workers: int = 1,
    weak: bool = False,
) -> list[MapRow]:
    """Decide every grid cell; rows come back sorted by (p, q, w)."""
    if q_max < 2:
        raise ValueError(f"--q-max must be at least 2, got {q_max}")
    widths = list(w_range)
    if any(w < 2 for w in widths):
        raise ValueError(f"-w values must be at least 2, got {widths}")
    tasks = [(p, q, w, digit_cap, weak) for p, q, w in map_grid(p_range, q_max, widths)]
    LOGGER.info("Optimality map: %s cells, %s worker(s)", len(tasks), workers)
    if workers <= 1 or len(tasks) <= 1:
        rows = [_decide_task(task) for task in tasks]
    else:
        level = logging.getLogger().getEffectiveLevel()
        with ProcessPoolExecutor(
            max_workers=workers, initializer=worker_initializer, initargs=(level,)
        ) as executor:
            rows = list(executor.map(_decide_task, tasks))
    return sorted(rows, key=lambda row: (row.p, row.q, row.w))
