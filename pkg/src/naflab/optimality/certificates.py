"""Explicit non-optimality certificates for tau = +-1 +- i and for p = 0.

Each family is an identity ``value(lhs) = value(rhs)`` where ``lhs`` has weight 2
and ``rhs`` is the w-NAF. The identities are written for a root rho of the
family's minimal polynomial; since rho differs from tau by a unit, the pairs are
mapped to tau-powers and the orientation whose digits all lie in the digit set
is kept.
"""

from __future__ import annotations

import logging
from collections.abc import Callable
from dataclasses import dataclass
from enum import StrEnum

from naflab import ztau
from naflab.expansion import (
    Expansion,
    MultiExpansion,
    NumberSystem,
    is_wnaf,
    value,
    wnaf_expand,
)
from naflab.rings.quadratic import QuadraticRing
from naflab.voronoi import lattice_ball
from naflab.ztau import ONE, TauParams, ZTauElem

LOGGER = logging.getLogger(__name__)

Pairs = list[tuple[ZTauElem, int]]
Template = Callable[[ZTauElem], tuple[Pairs, Pairs, dict[str, ZTauElem]]]


class CertificateVerificationError(RuntimeError):
    """Raised when a constructed certificate fails one of its checks."""


class CertificateFamily(StrEnum):
    P2Q2 = "p2q2"
    P0_EVEN = "p0-even"
    P0_ODD = "p0-odd"
    WITNESS = "witness"


@dataclass(frozen=True, slots=True)
class IdentityCertificate:
    family: CertificateFamily
    params: TauParams
    w: int
    lhs: MultiExpansion
    rhs: Expansion
    constants: tuple[tuple[str, ZTauElem], ...]
    root: ZTauElem
    unit: ZTauElem
    imag_sign: int = 1

    @property
    def expected_rhs_weight(self) -> int | None:
        if self.family is CertificateFamily.WITNESS:
            return None
        return 4 if self.w == 2 else 3


class _Ops:
    """Z[tau] arithmetic bound to one parameter pair."""

    def __init__(self, params: TauParams) -> None:
        self.params = params

    def mul(self, *factors: ZTauElem) -> ZTauElem:
        result = ONE
        for factor in factors:
            result = ztau.mul(result, factor, self.params)
        return result

    def pow(self, z: ZTauElem, n: int) -> ZTauElem:
        return ztau.power(z, n, self.params)

    def div(self, x: ZTauElem, y: ZTauElem) -> ZTauElem:
        quotient = ztau.div_exact(x, y, self.params)
        if quotient is None:
            raise CertificateVerificationError(f"{y} does not divide {x} for {self.params}")
        return quotient


def _integer(n: int) -> ZTauElem:
    return ZTauElem(n, 0)


def _p2q2_template(ops: _Ops, w: int) -> Template:
    def build(rho: ZTauElem) -> tuple[Pairs, Pairs, dict[str, ZTauElem]]:
        i = ztau.sub(rho, ONE)
        minus_one = _integer(-1)
        if w == 2:
            minus_i = ztau.neg(i)
            lhs = [(minus_one, 1), (minus_one, 0)]
            rhs = [(minus_i, 6), (minus_one, 4), (minus_i, 2), (minus_i, 0)]
            return lhs, rhs, {"i": i}
        a = ztau.scale(ztau.sub(ONE, i), 2 ** (w // 2 - 1))
        b = ops.div(a, rho)
        s = ztau.neg(ops.pow(i, (1 - w // 2) % 4))
        s_inv = ops.div(ONE, s)
        lhs = [(ztau.sub(a, ONE), w - 1), (ztau.neg(s_inv), 0)]
        rhs = [
            (s, 2 * w),
            (ztau.sub(ztau.neg(b), ONE), w),
            (ztau.sub(ops.mul(i, ops.pow(rho, w - 1)), s_inv), 0),
        ]
        return lhs, rhs, {"i": i, "A": a, "B": b, "s": s}

    return build


def _p0_template(ops: _Ops, q: int, w: int) -> Template:
    s = _integer((-1) ** ((w + 1) // 2))
    half_exponent = (w + 1) // 2

    def build_even(rho: ZTauElem) -> tuple[Pairs, Pairs, dict[str, ZTauElem]]:
        a = _integer(q**half_exponent // 2)
        b = ops.div(a, rho)
        lhs = [(ztau.sub(ztau.sub(a, ONE), rho), w - 1), (ztau.neg(s), 0)]
        rhs = [
            (s, 2 * w),
            (ztau.sub(ztau.neg(b), ONE), w),
            (ztau.sub(ztau.neg(s), ops.pow(rho, w - 1)), 0),
        ]
        return lhs, rhs, {"A": a, "B": b, "s": s}

    def build_odd(rho: ZTauElem) -> tuple[Pairs, Pairs, dict[str, ZTauElem]]:
        a = _integer((q**half_exponent - 1) // 2)
        b = ztau.scale(rho, (1 - q ** ((w - 1) // 2)) // 2)
        c = ztau.neg(a)
        t = (q + 1) // 2
        sc = ops.mul(s, c)
        lhs = [(ztau.sub(a, rho), w - 1), (sc, 0)]
        rhs = [
            (s, 2 * w),
            (ztau.sub(ztau.neg(b), ONE), w),
            (ztau.sub(sc, ztau.scale(ops.pow(rho, w - 1), t)), 0),
        ]
        return lhs, rhs, {"A": a, "B": b, "C": c, "s": s, "t": _integer(t)}

    return build_even if q % 2 == 0 else build_odd


def _roots(params: TauParams, trace: int) -> list[ZTauElem]:
    """Elements rho with rho^2 - trace*rho + q = 0, tau itself first."""
    ops = _Ops(params)
    found = [
        rho
        for rho in lattice_ball(params, params.q)
        if ops.mul(rho, rho) == ztau.sub(ztau.scale(rho, trace), _integer(params.q))
    ]
    return sorted(found, key=lambda rho: rho != ztau.TAU)


def _units(params: TauParams) -> list[ZTauElem]:
    found = [u for u in lattice_ball(params, 1) if not u.is_zero()]
    return sorted(found, key=lambda u: u != ONE)


def _orient(
    sys: NumberSystem,
    family: CertificateFamily,
    template: Template,
    trace: int,
    imag_sign: int,
) -> IdentityCertificate:
    ring = sys.ring
    assert isinstance(ring, QuadraticRing)
    params = ring.params
    ops = _Ops(params)
    for rho in _roots(params, trace):
        ratio = ztau.div_exact(rho, ztau.TAU, params)
        if ratio is None or ztau.norm_sq(ratio, params) != 1:
            continue
        lhs_pairs, rhs_pairs, constants = template(rho)
        for unit in _units(params):

            def carry(pairs: Pairs, unit: ZTauElem = unit, ratio: ZTauElem = ratio) -> Pairs:
                return [(ops.mul(unit, ops.pow(ratio, n), d), n) for d, n in pairs]

            lhs = carry(lhs_pairs)
            rhs = carry(rhs_pairs)
            if not all(sys.digit_set.contains(d) for d, _ in lhs + rhs):
                LOGGER.debug(
                    "%s: orientation rho=%s unit=%s misses the digit set", family, rho, unit
                )
                continue
            certificate = IdentityCertificate(
                family=family,
                params=params,
                w=sys.w,
                lhs=MultiExpansion.of(lhs),
                rhs=Expansion.from_pairs((n, d) for d, n in rhs),
                constants=tuple(constants.items()),
                root=rho,
                unit=unit,
                imag_sign=imag_sign,
            )
            verify_certificate(certificate, sys)
            return certificate
    LOGGER.info(
        "%s: no orientation of the %s identity fits the digit set; using the search witness",
        sys.label,
        family,
    )
    return _from_witness(sys, imag_sign)


def _from_witness(sys: NumberSystem, imag_sign: int) -> IdentityCertificate:
    from naflab.optimality.subadditivity import check_subadditive

    ring = sys.ring
    assert isinstance(ring, QuadraticRing)
    verdict = check_subadditive(sys)
    if verdict.witness is None:
        raise CertificateVerificationError(f"{sys.label} is optimal; no certificate exists")
    witness = verdict.witness
    certificate = IdentityCertificate(
        family=CertificateFamily.WITNESS,
        params=ring.params,
        w=sys.w,
        lhs=MultiExpansion.of([(witness.c, 0), (witness.d, witness.n)]),
        rhs=witness.sum_wnaf,
        constants=(),
        root=ztau.TAU,
        unit=ONE,
        imag_sign=imag_sign,
    )
    verify_certificate(certificate, sys)
    return certificate


def verify_certificate(cert: IdentityCertificate, sys: NumberSystem) -> None:
    """Check value equality, digit membership, the w-NAF property and both weights."""
    problems: list[str] = []
    lhs_value = value(cert.lhs, sys)
    rhs_value = value(cert.rhs, sys)
    if lhs_value != rhs_value:
        problems.append(f"values differ: {lhs_value} != {rhs_value}")
    digits = [s.digit for s in cert.lhs.singletons] + [d for _, d in cert.rhs.terms]
    missing = [str(d) for d in digits if not sys.digit_set.contains(d) or d.is_zero()]
    if missing:
        problems.append(f"not nonzero digits: {', '.join(missing)}")
    if not is_wnaf(cert.rhs, sys.w):
        problems.append("rhs is not a w-NAF")
    if cert.lhs.weight != 2:
        problems.append(f"lhs weight {cert.lhs.weight} != 2")
    expected = cert.expected_rhs_weight
    if expected is None and cert.rhs.weight < 3:
        problems.append(f"rhs weight {cert.rhs.weight} < 3")
    if expected is not None and cert.rhs.weight != expected:
        problems.append(f"rhs weight {cert.rhs.weight} != {expected}")
    if not problems and wnaf_expand(rhs_value, sys) != cert.rhs:
        problems.append("rhs differs from the w-NAF recoding of its value")
    if problems:
        raise CertificateVerificationError(f"{cert.family} for {sys.label}: {'; '.join(problems)}")


def counterexample_p2q2(
    w: int,
    p_sign: int = 1,
    *,
    system: NumberSystem | None = None,
) -> IdentityCertificate:
    """Certificate for tau = p/2 +- i with p = +-2, q = 2 and even w."""
    if w < 2 or w % 2:
        raise ValueError(f"-w must be even and at least 2 for p=+-2, q=2; got {w}")
    if p_sign not in (1, -1):
        raise ValueError(f"p sign must be +1 or -1, got {p_sign}")
    sys = system or NumberSystem.quadratic(2 * p_sign, 2, w, digit_cap=None)
    ops = _Ops(TauParams(2 * p_sign, 2))
    return _orient(sys, CertificateFamily.P2Q2, _p2q2_template(ops, w), 2, 1)


def counterexample_p0(
    q: int,
    w: int,
    imag_sign: int = 1,
    *,
    system: NumberSystem | None = None,
) -> IdentityCertificate:
    """Certificate for tau = +-i*sqrt(q) and odd w >= 3.

    Both roots share the coordinates of Z[tau]; ``imag_sign`` only records which
    complex root the certificate is read against.
    """
    if q < 2:
        raise ValueError(f"-q must be at least 2 for p=0, got {q}")
    if w < 3 or w % 2 == 0:
        raise ValueError(f"-w must be odd and at least 3 for p=0; got {w}")
    if imag_sign not in (1, -1):
        raise ValueError(f"imaginary sign must be +1 or -1, got {imag_sign}")
    sys = system or NumberSystem.quadratic(0, q, w, digit_cap=None)
    ops = _Ops(TauParams(0, q))
    family = CertificateFamily.P0_EVEN if q % 2 == 0 else CertificateFamily.P0_ODD
    return _orient(sys, family, _p0_template(ops, q, w), 0, imag_sign)


def counterexample_for(p: int, q: int, w: int, *, imag_sign: int = 1) -> IdentityCertificate:
    """Pick the family matching (p, q)."""
    if abs(p) == 2 and q == 2:
        return counterexample_p2q2(w, 1 if p > 0 else -1)
    if p == 0:
        return counterexample_p0(q, w, imag_sign)
    raise ValueError(f"-p/-q: no certificate family for p={p}, q={q} (use p=0 or p=+-2, q=2)")
