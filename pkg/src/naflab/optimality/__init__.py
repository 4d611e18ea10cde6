"""Optimality decisions, bounds, certificates, oracle and grid sweeps."""

from naflab.optimality.bounds import (
    BoundReport,
    analytic_condition,
    analytic_conditions,
    bound_report,
    tsq,
    tsq_weak,
    weak_list,
)
from naflab.optimality.certificates import (
    CertificateFamily,
    CertificateVerificationError,
    IdentityCertificate,
    counterexample_for,
    counterexample_p0,
    counterexample_p2q2,
    verify_certificate,
)
from naflab.optimality.oracle import (
    OracleBoundsError,
    default_max_exp,
    min_weight_multi_expansion,
    min_weight_oracle,
)
from naflab.optimality.subadditivity import (
    Engine,
    Verdict,
    Witness,
    check_subadditive,
    check_weak_subadditive,
)
from naflab.optimality.sweep import MapRow, MapVerdict, optimality_map, resolve_workers

__all__ = [
    "BoundReport",
    "CertificateFamily",
    "CertificateVerificationError",
    "Engine",
    "IdentityCertificate",
    "MapRow",
    "MapVerdict",
    "OracleBoundsError",
    "Verdict",
    "Witness",
    "analytic_condition",
    "analytic_conditions",
    "bound_report",
    "check_subadditive",
    "check_weak_subadditive",
    "counterexample_for",
    "counterexample_p0",
    "counterexample_p2q2",
    "default_max_exp",
    "min_weight_multi_expansion",
    "min_weight_oracle",
    "optimality_map",
    "resolve_workers",
    "tsq",
    "tsq_weak",
    "verify_certificate",
    "weak_list",
]
