from __future__ import annotations

from dataclasses import dataclass, field

from src.core.errors import InvalidExponent, OperatorLabError, RegimeMismatch
from src.core.logging_helpers import stage_timer
from src.core.models.run_config import RunConfig, ScanFamily
from src.core.models.scan_record import SCAN_COLUMNS, ScanRecord
from src.core.models.schatten_report import Verdict
from src.experiments.random_instances import TrialMapper
from src.experiments.scans import growth_slopes, lipschitz_scan
from src.matcore.schatten import format_exponent
from src.runtime.config import RuntimeConfig
from src.runtime.jobs.job_result import JobResult
from src.storage.artifacts.artifact_store import ArtifactStore

SLOPE_COLUMNS = ("family", "p", "slope")


@dataclass
class ScanOutcome:
    records: list[ScanRecord]
    slopes: dict[tuple[str, float], float] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(record.verdict != Verdict.FAIL for record in self.records)


class ScanJob:
    def __init__(self, runtime: RuntimeConfig, store: ArtifactStore, mapper: TrialMapper) -> None:
        self.runtime = runtime
        self.store = store
        self.mapper = mapper

    def run(self, config: RunConfig, run_id: str) -> JobResult[ScanOutcome]:
        if config.family is None:
            return JobResult.failure("scan needs a family", flag="--family")
        exact_families = (ScanFamily.COUNTEREXAMPLE, ScanFamily.REGIME_PROBE)
        if config.family in exact_families and any(N < 2 for N in config.n_list):
            return JobResult.failure(f"--N: the family needs N >= 2, got {config.n_list}", flag="--N")
        try:
            with stage_timer("lipschitz_scan", family=config.family.value, trials=config.trials):
                records = lipschitz_scan(
                    config.family,
                    config.p_list,
                    config.n_list,
                    config.trials,
                    self.runtime.seed,
                    self.mapper,
                )
        except (RegimeMismatch, InvalidExponent) as e:
            return JobResult.failure(f"--p: {e}", flag="--p")
        except OperatorLabError as e:
            return JobResult.failure(str(e))

        slopes = growth_slopes(records)
        self.store.save_csv(run_id, "scan.csv", (r.to_row() for r in records), SCAN_COLUMNS)
        self.store.save_csv(
            run_id,
            "slopes.csv",
            (
                {"family": family, "p": format_exponent(p), "slope": slope}
                for (family, p), slope in slopes.items()
            ),
            SLOPE_COLUMNS,
        )
        return JobResult.success(ScanOutcome(records=records, slopes=slopes))
