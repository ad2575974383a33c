from src.experiments.audit_trials import run_audit_trials
from src.experiments.class_c import class_c_norm, class_C_check
from src.experiments.counterexample import (
    CounterexampleInstance,
    build_counterexample,
    holder_failure_witness,
    measure_growth,
    scaled_counterexample,
)
from src.experiments.identities import (
    run_identity_trials,
    verify_base_point_identity,
    verify_pair_identity,
    verify_unitary_identity,
)
from src.experiments.regime_probe import probe_regime_violation
from src.experiments.scans import fit_loglog_slope, growth_slopes, lipschitz_scan

__all__ = [
    "CounterexampleInstance",
    "build_counterexample",
    "class_C_check",
    "class_c_norm",
    "fit_loglog_slope",
    "growth_slopes",
    "holder_failure_witness",
    "lipschitz_scan",
    "measure_growth",
    "probe_regime_violation",
    "run_audit_trials",
    "run_identity_trials",
    "scaled_counterexample",
    "verify_base_point_identity",
    "verify_pair_identity",
    "verify_unitary_identity",
]
