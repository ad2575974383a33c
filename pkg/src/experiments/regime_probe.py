from __future__ import annotations

from collections.abc import Iterable

from src.core.errors import RegimeMismatch
from src.core.models.scan_record import ScanRecord
from src.experiments.counterexample import build_counterexample, predicted_ratio
from src.matcore.schatten import (
    SchattenExponent,
    conjugate_exponent,
    format_exponent,
    parse_exponent,
    schatten_norm,
)
from src.utils.logging import get_logger

logger = get_logger(__name__)

FAMILY = "regime-probe"
# constant of the sinc factorization: ‖𝔇^[1]f‖ ≤ 3σ‖f‖∞ in the Haagerup-like norm
DECLARED_CONSTANT = 3.0


def probe_regime_violation(
    N_list: Iterable[int],
    p_list: Iterable[SchattenExponent | str],
    constant: float = DECLARED_CONSTANT,
) -> list[ScanRecord]:
    """
    Counterexample ratios against the bound shape a p ∈ [1, 2) estimate would give.

    An estimate ‖W‖_p ≤ C‖Ψ‖‖T‖_p for p < 2 transfers by duality to the exponent p',
    so it would force ‖f(A1,B) − f(A2,B)‖_p' ≤ C·σ‖f‖∞·‖A1 − A2‖_p'. Each record is
    taken in p' with ``measured`` the Lipschitz ratio, ``bound`` = C·σ‖f‖∞ and
    ``predicted`` the growth law N^{1/2 − 1/p'}. Its ``ratio`` grows without limit in N.
    Nothing is asserted, so every verdict is n/a.
    """
    exponents = [parse_exponent(p) for p in p_list]
    for p in exponents:
        if not 1.0 <= p < 2.0:
            raise RegimeMismatch(f"regime probes take p in [1, 2), got {format_exponent(p)}")

    records: list[ScanRecord] = []
    for N in N_list:
        instance = build_counterexample(N)
        difference = instance.difference()
        perturbation = instance.A1 - instance.A2
        sigma = instance.f.bandlimit or 0.0
        sup = instance.f.sup_bound() or 0.0
        bound = constant * sigma * sup
        for p in exponents:
            dual = conjugate_exponent(p)
            difference_norm = schatten_norm(difference, dual)
            perturbation_norm = schatten_norm(perturbation, dual)
            records.append(
                ScanRecord(
                    family=FAMILY,
                    N=N,
                    p=dual,
                    measured=difference_norm / perturbation_norm,
                    predicted=predicted_ratio(N, dual),
                    bound=bound,
                    difference_norm=difference_norm,
                    perturbation_norm=perturbation_norm,
                )
            )
        logger.debug(f"Regime probe N={N}: declared constant {bound:.6g} (σ={sigma:.6g}, ‖f‖∞ ≤ {sup:.6g})")
    return records
