from __future__ import annotations

from dataclasses import dataclass

from src.core.errors import InvalidExponent, OperatorLabError, RegimeMismatch
from src.core.logging_helpers import stage_timer
from src.core.models.run_config import RunConfig
from src.core.models.schatten_report import SchattenReport, Verdict
from src.experiments.audit_trials import run_audit_trials
from src.experiments.random_instances import TrialMapper
from src.runtime.config import RuntimeConfig
from src.runtime.jobs.job_result import JobResult
from src.storage.artifacts.artifact_store import ArtifactStore
from src.toi.audits import AuditTolerance

AUDIT_COLUMNS = ("context", "kind", "p", "q", "r", "measured", "bound", "verdict")


@dataclass
class AuditOutcome:
    reports: list[SchattenReport]

    @property
    def failures(self) -> list[SchattenReport]:
        return [report for report in self.reports if report.verdict == Verdict.FAIL]

    @property
    def worst_ratio(self) -> float:
        return max((report.ratio for report in self.reports), default=0.0)

    @property
    def passed(self) -> bool:
        return not self.failures


class AuditJob:
    """Randomized Schatten-bound audits of one bound kind."""

    def __init__(self, runtime: RuntimeConfig, store: ArtifactStore, mapper: TrialMapper) -> None:
        self.runtime = runtime
        self.store = store
        self.mapper = mapper

    def run(self, config: RunConfig, run_id: str) -> JobResult[AuditOutcome]:
        if config.bound_kind is None:
            return JobResult.failure("audit needs a bound kind", flag="--kind")
        try:
            with stage_timer("audit", kind=config.bound_kind.value, trials=config.trials):
                reports = run_audit_trials(
                    config.bound_kind,
                    config.dims,
                    config.trials,
                    config.p_list,
                    config.q,
                    self.runtime.seed,
                    tolerance=AuditTolerance(margin=self.runtime.audit_margin, atol=self.runtime.audit_atol),
                    margin_pi=self.runtime.sinc_node_margin,
                    audit_constant=self.runtime.class_c_audit_constant,
                    mapper=self.mapper,
                )
        except (RegimeMismatch, InvalidExponent) as e:
            flag = "--p" if config.q is None else "--p/--q"
            return JobResult.failure(f"{flag}: {e}", flag=flag)
        except OperatorLabError as e:
            return JobResult.failure(str(e))

        self.store.save_csv(run_id, "audit.csv", (r.to_row() for r in reports), AUDIT_COLUMNS)
        return JobResult.success(AuditOutcome(reports=reports))
