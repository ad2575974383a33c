from __future__ import annotations

from dataclasses import dataclass, field

from src.core.errors import OperatorLabError
from src.core.logging_helpers import stage_timer
from src.core.models.run_config import RunConfig
from src.core.models.scan_record import SCAN_COLUMNS, ScanRecord
from src.core.models.schatten_report import Verdict
from src.experiments.counterexample import build_counterexample, measure_growth, scaled_counterexample
from src.experiments.scans import growth_slopes
from src.matcore.schatten import format_exponent
from src.runtime.config import RuntimeConfig
from src.runtime.jobs.job_result import JobResult
from src.storage.artifacts.artifact_store import ArtifactStore
from src.utils.logging import get_logger

logger = get_logger(__name__)

BESOV_INVARIANCE_TOL = 1e-9


@dataclass
class CounterexampleOutcome:
    records: list[ScanRecord]
    slopes: dict[tuple[str, float], float] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(
            record.verdict != Verdict.FAIL
            and (record.besov_residual is None or record.besov_residual <= BESOV_INVARIANCE_TOL)
            for record in self.records
        )


class CounterexampleJob:
    """Growth law of the DFT family, plus its ε-rescaled copies for every --epsilon."""

    def __init__(self, runtime: RuntimeConfig, store: ArtifactStore) -> None:
        self.runtime = runtime
        self.store = store

    def run(self, config: RunConfig, run_id: str) -> JobResult[CounterexampleOutcome]:
        if any(N < 2 for N in config.n_list):
            return JobResult.failure(f"--N: the family needs N >= 2, got {config.n_list}", flag="--N")
        try:
            with stage_timer("measure_growth", sizes=len(config.n_list), exponents=len(config.p_list)):
                records = measure_growth(config.n_list, config.p_list)

            if config.epsilon_list:
                with stage_timer("scaled_family", epsilons=len(config.epsilon_list)):
                    for N in config.n_list:
                        instance = build_counterexample(N)
                        records.extend(
                            scaled_counterexample(N, epsilon, p, instance=instance)
                            for epsilon in config.epsilon_list
                            for p in config.p_list
                        )
        except OperatorLabError as e:
            return JobResult.failure(str(e))

        slopes = growth_slopes(records)
        for (family, p), slope in slopes.items():
            logger.debug(f"{family} p={format_exponent(p)}: log-log slope {slope:.6f}")

        self.store.save_csv(run_id, "counterexample.csv", (r.to_row() for r in records), SCAN_COLUMNS)
        self.store.save_json(run_id, "counterexample.json", records)
        return JobResult.success(CounterexampleOutcome(records=records, slopes=slopes))
