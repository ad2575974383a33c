from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from src.core.errors import NoConvergence, OperatorLabError
from src.core.logging_helpers import stage_timer
from src.core.models.identity_report import IdentityKind, IdentityReport, IdentitySummary
from src.core.models.run_config import RunConfig
from src.core.models.schatten_report import Verdict
from src.experiments.identities import run_identity_trials, verify_base_point_identity
from src.experiments.random_instances import TrialMapper
from src.funcalc.functions import TrigPoly1D
from src.runtime.config import RuntimeConfig
from src.runtime.jobs.inputs import InputFileError, load_matrix, load_trig_poly
from src.runtime.jobs.job_result import JobResult
from src.storage.artifacts.artifact_store import ArtifactStore

IDENTITY_COLUMNS = ("trial", "identity", "dim", "residual", "first_residual", "second_residual", "verdict")


@dataclass
class VerifyOutcome:
    summary: IdentitySummary
    reports: list[IdentityReport] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.summary.verdict == Verdict.PASS


def _summary(identity: IdentityKind, report: IdentityReport) -> IdentitySummary:
    return IdentitySummary(
        identity=identity,
        trials=1,
        max_residual=report.residual,
        max_first_residual=report.first_residual,
        max_second_residual=report.second_residual,
        tolerance=report.tolerance,
        verdict=report.verdict,
    )


class VerifyJob:
    def __init__(self, runtime: RuntimeConfig, store: ArtifactStore, mapper: TrialMapper) -> None:
        self.runtime = runtime
        self.store = store
        self.mapper = mapper

    def _given_matrices(
        self, config: RunConfig, matrix: Path
    ) -> tuple[list[IdentityReport], IdentitySummary]:
        if config.identity != IdentityKind.BASE_POINT:
            raise InputFileError("--matrix", "only the base-point identity runs on given matrices")
        if config.matrix_b is None or config.trigpoly is None:
            raise InputFileError("--matrix-b", "base-point checks need --matrix-b and --trigpoly")
        a = load_matrix(matrix, "--matrix")
        b = load_matrix(config.matrix_b, "--matrix-b")
        f = load_trig_poly(config.trigpoly, "--trigpoly")
        if isinstance(f, TrigPoly1D):
            raise InputFileError("--trigpoly", "the identity needs a bivariate polynomial (two periods)")
        try:
            report = verify_base_point_identity(
                f, a, b, config.alpha, config.beta, self.runtime.identity_tolerance, config.p_list
            )
        except NoConvergence:
            raise
        except OperatorLabError as e:
            raise InputFileError("--matrix", str(e)) from e
        return [report], _summary(IdentityKind.BASE_POINT, report)

    def run(self, config: RunConfig, run_id: str) -> JobResult[VerifyOutcome]:
        if config.identity is None:
            return JobResult.failure("verify needs an identity", flag="identity")
        try:
            with stage_timer("verify", identity=config.identity.value, trials=config.trials):
                if config.matrix is not None:
                    reports, summary = self._given_matrices(config, config.matrix)
                else:
                    reports, summary = run_identity_trials(
                        config.identity,
                        config.dims,
                        config.trials,
                        self.runtime.seed,
                        self.runtime.identity_tolerance,
                        config.p_list,
                        self.mapper,
                    )
        except InputFileError as e:
            return JobResult.failure(str(e), flag=e.flag)
        except OperatorLabError as e:
            return JobResult.failure(str(e))

        rows = [
            {"trial": index, **report.model_dump(mode="json", exclude={"tolerance", "lipschitz_ratios"})}
            for index, report in enumerate(reports)
        ]
        self.store.save_csv(run_id, "identity_residuals.csv", rows, IDENTITY_COLUMNS)
        self.store.save_json(run_id, "identity_summary.json", summary)
        if any(report.lipschitz_ratios for report in reports):
            self.store.save_json(
                run_id, "lipschitz_ratios.json", [report.lipschitz_ratios for report in reports]
            )
        return JobResult.success(VerifyOutcome(summary=summary, reports=reports))
