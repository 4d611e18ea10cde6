"""CLI entrypoint for naflab."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from importlib.metadata import PackageNotFoundError
from importlib.metadata import version as package_version
from typing import Any

import numpy as np

from naflab.config import OutputFormat, load_config, write_example_config
from naflab.digitset import expected_size
from naflab.expansion import (
    Expansion,
    MultiExpansion,
    NumberSystem,
    describe,
    is_wnaf,
    random_wnaf,
    value,
    wnaf_expand,
)
from naflab.logging_setup import configure_logging
from naflab.optimality.bounds import bound_report
from naflab.optimality.certificates import counterexample_for
from naflab.optimality.oracle import default_max_exp, min_weight_multi_expansion
from naflab.optimality.subadditivity import Verdict, check_subadditive, check_weak_subadditive
from naflab.optimality.sweep import optimality_map, resolve_workers
from naflab.presentation.cli.formatting import emit, render
from naflab.presentation.cli.options import CliConfig, resolve_config_path
from naflab.rings import QuadraticRing, Ring
from naflab.voronoi import build_cell, classify_scaled, is_restricted_class

LOGGER = logging.getLogger(__name__)

MAP_COLUMNS = (
    "p",
    "q",
    "w",
    "verdict",
    "witness_c",
    "witness_d",
    "witness_n",
    "witness_weight",
)
_ROUNDTRIP_COORD_BOUND = 10**6


def _resolve_app_version() -> str:
    try:
        return package_version("naflab")
    except PackageNotFoundError:
        return "0.0.0.dev0"


def _prepare(args: argparse.Namespace) -> CliConfig:
    app = load_config(resolve_config_path(getattr(args, "config", None)))
    configure_logging(getattr(args, "log_level", None) or app.runtime.log_level)
    return CliConfig.from_args(args, app)


def _quadratic(cfg: CliConfig) -> QuadraticRing:
    ring = cfg.ring()
    if not isinstance(ring, QuadraticRing):
        raise ValueError(f"{cfg.command}: needs -p/-q, not --base")
    return ring


def _entries(e: Expansion | MultiExpansion, ring: Ring) -> list[list[Any]]:
    """[exponent, "digit"] pairs, lowest exponent first."""
    if isinstance(e, Expansion):
        pairs = list(e.terms)
    else:
        pairs = [(s.exponent, s.digit) for s in e.singletons]
    return [[n, ring.format_element(d)] for n, d in pairs]


def _output(cfg: CliConfig, payload: Any, **kwargs: Any) -> None:
    emit(render(payload, cfg.fmt, **kwargs), cfg.out)


def cmd_cell(args: argparse.Namespace) -> int:
    cfg = _prepare(args)
    ring = _quadratic(cfg)
    cell = build_cell(ring.params)
    payload: dict[str, Any] = {
        "system": ring.label,
        "m": cell.m,
        "circumradius_sq": str(cell.circumradius_sq),
        "vertices": [str(v) for v in cell.vertices],
        "midpoints": [str(v) for v in cell.midpoints],
        "relevant_vectors": [str(y) for y in cell.relevant_vectors],
    }
    if cfg.z is not None:
        if args.k < 0:
            raise ValueError(f"-k must be non-negative, got {args.k}")
        z = cfg.element(ring)
        boundary = classify_scaled(z, args.k, cell)
        payload["z"] = str(z)
        payload["k"] = args.k
        payload["class"] = str(boundary)
        payload["restricted"] = is_restricted_class(boundary, cell.m)
    _output(cfg, payload)
    return 0


def cmd_digits(args: argparse.Namespace) -> int:
    cfg = _prepare(args)
    sys_ = cfg.system()
    ring = sys_.ring
    digits = sys_.digit_set.digits
    if cfg.fmt is OutputFormat.CSV:
        rows = [{"digit": ring.format_element(d), "norm": ring.norm(d)} for d in digits]
        _output(cfg, rows, columns=("digit", "norm"))
        return 0
    payload: dict[str, Any] = {
        "system": ring.label,
        "w": sys_.w,
        "size": len(sys_.digit_set),
        "expected_size": expected_size(ring.modulus, sys_.w),
        "digits": [ring.format_element(d) for d in digits],
    }
    if cfg.plain:
        payload["human"] = [ring.describe(d) for d in digits]
    _output(cfg, payload)
    return 0


def _parse_expansion(text: str, sys_: NumberSystem) -> tuple[Expansion, Any | None]:
    ring = sys_.ring
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"--expansion: not valid JSON ({exc})") from exc
    target = None
    if isinstance(data, dict):
        if "z" in data:
            target = ring.parse_element(str(data["z"]))
        data = data.get("entries")
    if not isinstance(data, list):
        raise ValueError('--expansion: expected a list of [exponent, "digit"] entries')
    pairs = []
    for item in data:
        if isinstance(item, dict):
            digit, exponent = item.get("digit"), item.get("exponent")
        elif isinstance(item, list) and len(item) == 2:
            exponent, digit = item
        else:
            raise ValueError(f"--expansion: cannot read entry {item!r}")
        if not isinstance(exponent, int):
            raise ValueError(f"--expansion: exponent must be an integer in {item!r}")
        pairs.append((exponent, ring.parse_element(str(digit))))
    return Expansion.from_pairs(pairs), target


def _verify_expansion(e: Expansion, target: Any | None, sys_: NumberSystem) -> list[str]:
    ring = sys_.ring
    problems = [
        f"{ring.format_element(d)} is not a nonzero digit"
        for _, d in e.terms
        if ring.is_zero(d) or not sys_.digit_set.contains(d)
    ]
    if not is_wnaf(e, sys_.w):
        problems.append(f"exponents {list(e.exponents)} are not {sys_.w} apart")
    total = value(e, sys_)
    if target is not None and total != target:
        problems.append(
            f"value {ring.format_element(total)} differs from z={ring.format_element(target)}"
        )
    if not problems and wnaf_expand(total, sys_) != e:
        problems.append("differs from the w-NAF recoding of its value")
    return problems


def cmd_wnaf(args: argparse.Namespace) -> int:
    cfg = _prepare(args)
    sys_ = cfg.system()
    ring = sys_.ring
    if args.verify:
        text = args.expansion if args.expansion is not None else sys.stdin.read()
        expansion, target = _parse_expansion(text, sys_)
        problems = _verify_expansion(expansion, target, sys_)
        payload: dict[str, Any] = {
            "system": ring.label,
            "w": sys_.w,
            "value": ring.format_element(value(expansion, sys_)),
            "valid": not problems,
            "problems": problems,
        }
        _output(cfg, payload)
        return 0 if not problems else 1
    z = cfg.element(ring)
    expansion = wnaf_expand(z, sys_)
    payload = {
        "system": ring.label,
        "w": sys_.w,
        "z": ring.format_element(z),
        "weight": expansion.weight,
        "entries": _entries(expansion, ring),
    }
    if cfg.plain:
        payload["human"] = describe(expansion, sys_)
    _output(cfg, payload)
    return 0


def _verdict_payload(verdict: Verdict, sys_: NumberSystem, key: str) -> dict[str, Any]:
    payload: dict[str, Any] = {key: verdict.optimal}
    witness = verdict.witness
    if witness is None:
        return payload
    ring = sys_.ring
    payload["witness"] = {
        "c": ring.format_element(witness.c),
        "d": ring.format_element(witness.d),
        "n": witness.n,
        "weight": witness.weight,
        "sum_wnaf": _entries(witness.sum_wnaf, ring),
    }
    return payload


def cmd_decide(args: argparse.Namespace) -> int:
    cfg = _prepare(args)
    sys_ = cfg.system()
    if args.weak:
        verdict = check_weak_subadditive(sys_, engine=args.engine)
        payload = _verdict_payload(verdict, sys_, "weak_subadditive")
    else:
        verdict = check_subadditive(sys_, engine=args.engine)
        payload = _verdict_payload(verdict, sys_, "optimal")
    _output(cfg, payload)
    return 0


def cmd_bound(args: argparse.Namespace) -> int:
    cfg = _prepare(args)
    ring = _quadratic(cfg)
    report = bound_report(ring.params, cfg.width())
    payload = {
        "system": ring.label,
        "w": report.w,
        "tsq": str(report.tsq),
        "tsq_below_one": report.tsq_below_one,
        "tsq_weak": str(report.tsq_weak),
        "tsq_weak_below_one": report.tsq_weak_below_one,
        "conditions": list(report.conditions),
        "analytic_condition": report.analytic,
        "weak_region": report.weak_region,
    }
    _output(cfg, payload)
    return 0


def cmd_counterexample(args: argparse.Namespace) -> int:
    cfg = _prepare(args)
    ring = _quadratic(cfg)
    params = ring.params
    cert = counterexample_for(
        params.p, params.q, cfg.width(), imag_sign=-1 if args.conjugate else 1
    )
    total = ring.zero
    for single in cert.lhs.singletons:
        total = ring.add(total, ring.shift(single.digit, single.exponent))
    payload = {
        "family": cert.family.value,
        "system": ring.label,
        "w": cert.w,
        "imag_sign": cert.imag_sign,
        "root": str(cert.root),
        "unit": str(cert.unit),
        "constants": {name: str(constant) for name, constant in cert.constants},
        "value": str(total),
        "lhs_weight": cert.lhs.weight,
        "rhs_weight": cert.rhs.weight,
        "lhs": _entries(cert.lhs, ring),
        "rhs": _entries(cert.rhs, ring),
        "verified": True,
    }
    _output(cfg, payload)
    return 0


def cmd_oracle(args: argparse.Namespace) -> int:
    cfg = _prepare(args)
    sys_ = cfg.system()
    ring = sys_.ring
    z = cfg.element(ring)
    oracle_cfg = cfg.app.oracle
    max_weight = oracle_cfg.max_weight if args.max_weight is None else args.max_weight
    max_exp = args.max_exp
    if max_exp is None:
        max_exp = default_max_exp(z, sys_, extra_exponents=oracle_cfg.extra_exponents)
    found = min_weight_multi_expansion(z, sys_, max_weight=max_weight, max_exp=max_exp)
    payload = {
        "system": ring.label,
        "w": sys_.w,
        "z": ring.format_element(z),
        "max_weight": max_weight,
        "max_exp": max_exp,
        "wnaf_weight": wnaf_expand(z, sys_).weight,
        "min_weight": None if found is None else found.weight,
        "multi_expansion": None if found is None else _entries(found, ring),
    }
    _output(cfg, payload)
    return 0


def _pick(flag_value: int | None, configured: int) -> int:
    return configured if flag_value is None else flag_value


def cmd_map(args: argparse.Namespace) -> int:
    cfg = _prepare(args)
    grid = cfg.app.map
    p_max = _pick(args.p_max, grid.p_max)
    q_max = _pick(args.q_max, grid.q_max)
    w_min = _pick(args.w_min, grid.w_min)
    w_max = _pick(args.w_max, grid.w_max)
    digit_cap = _pick(args.digit_cap, grid.digit_cap)
    if p_max < 0:
        raise ValueError(f"--p-max must be non-negative, got {p_max}")
    if w_min < 2 or w_max < w_min:
        raise ValueError(f"--w-min/--w-max must satisfy 2 <= w_min <= w_max, got {w_min}, {w_max}")
    workers = resolve_workers(_pick(args.workers, cfg.app.runtime.workers))
    rows = optimality_map(
        range(-p_max, p_max + 1),
        q_max,
        range(w_min, w_max + 1),
        digit_cap,
        workers=workers,
        weak=args.weak,
    )
    payload = [
        {
            "p": row.p,
            "q": row.q,
            "w": row.w,
            "verdict": row.verdict.value,
            "witness_c": row.witness_c,
            "witness_d": row.witness_d,
            "witness_n": row.witness_n,
            "witness_weight": row.witness_weight,
        }
        for row in rows
    ]
    _output(cfg, payload, columns=MAP_COLUMNS)
    return 0


def _roundtrip_failures(
    sys_: NumberSystem, rng: np.random.Generator, samples: int
) -> tuple[int, int]:
    ring = sys_.ring
    uniqueness = 0
    for _ in range(samples):
        expansion = random_wnaf(sys_, rng)
        if wnaf_expand(value(expansion, sys_), sys_) != expansion:
            uniqueness += 1
    width = len(ring.to_coords([ring.zero]))
    value_expand = 0
    for _ in range(samples):
        raw = rng.integers(-_ROUNDTRIP_COORD_BOUND, _ROUNDTRIP_COORD_BOUND + 1, size=width)
        z = ring.from_coords([int(c) for c in raw])
        expansion = wnaf_expand(z, sys_)
        digits_ok = all(sys_.digit_set.contains(d) for _, d in expansion.terms)
        if value(expansion, sys_) != z or not is_wnaf(expansion, sys_.w) or not digits_ok:
            value_expand += 1
    return value_expand, uniqueness


def cmd_roundtrip(args: argparse.Namespace) -> int:
    cfg = _prepare(args)
    if args.samples < 1:
        raise ValueError(f"--samples must be positive, got {args.samples}")
    sys_ = cfg.system()
    rng = np.random.default_rng(args.seed)
    value_expand, uniqueness = _roundtrip_failures(sys_, rng, args.samples)
    ok = value_expand == 0 and uniqueness == 0
    payload = {
        "system": sys_.ring.label,
        "w": sys_.w,
        "seed": args.seed,
        "samples": args.samples,
        "value_expand_failures": value_expand,
        "uniqueness_failures": uniqueness,
        "ok": ok,
    }
    _output(cfg, payload)
    return 0 if ok else 1


def cmd_init(args: argparse.Namespace) -> int:
    config_path = resolve_config_path(args.config)
    if config_path.exists() and not args.force:
        raise ValueError(f"--config: {config_path} already exists; pass --force to overwrite")
    write_example_config(config_path)
    print(f"Wrote {config_path}")
    return 0


def main(argv: list[str] | None = None) -> int:
    from naflab.presentation.cli.parser import build_parser

    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return int(args.func(args))
    except KeyboardInterrupt:
        print("Interrupted.", file=sys.stderr)
        return 130
    except ValueError as exc:
        print(f"Error: {exc}", file=sys.stderr)
        return 2
    except RuntimeError as exc:
        LOGGER.debug("Command failed", exc_info=True)
        print(f"Error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
