from __future__ import annotations

from dataclasses import dataclass, field

from src.core.errors import NoConvergence, OperatorLabError
from src.core.logging_helpers import stage_timer
from src.core.models.run_config import RunConfig
from src.core.models.spectral_payload import SpectralMeasurePayload
from src.matcore.dense import frobenius
from src.matcore.spectral import check_invariants, reconstruct, spectral_decompose
from src.runtime.config import RuntimeConfig
from src.runtime.jobs.inputs import InputFileError, load_matrix
from src.runtime.jobs.job_result import JobResult
from src.storage.artifacts.artifact_store import ArtifactStore
from src.utils.logging import get_logger

logger = get_logger(__name__)


@dataclass
class DecomposeOutcome:
    measure: SpectralMeasurePayload
    reconstruction_error: float
    violations: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations


class DecomposeJob:
    def __init__(self, runtime: RuntimeConfig, store: ArtifactStore) -> None:
        self.runtime = runtime
        self.store = store

    def run(self, config: RunConfig, run_id: str) -> JobResult[DecomposeOutcome]:
        if config.matrix is None:
            return JobResult.failure("decompose needs a matrix file", flag="--matrix")
        try:
            matrix = load_matrix(config.matrix, "--matrix")
            scale = max(frobenius(matrix), 1.0)
            tolerance = self.runtime.normality_rel * scale

            with stage_timer("decompose", kind=config.spectral_kind.value, dim=matrix.shape[0]):
                measure = spectral_decompose(
                    matrix, config.spectral_kind, tol=tolerance, cluster_rel=self.runtime.cluster_rel
                )

            # invariants are checked at the scale the decomposition itself guarantees
            violations = check_invariants(measure, self.runtime.cluster_rel * scale)
            error = frobenius(reconstruct(measure) - matrix) / scale
        except InputFileError as e:
            return JobResult.failure(str(e), flag=e.flag)
        except NoConvergence as e:
            return JobResult.failure(str(e))
        except OperatorLabError as e:
            return JobResult.failure(f"--matrix: {e}", flag="--matrix")

        if violations:
            logger.warning(f"Spectral measure violates: {', '.join(violations)}")

        payload = SpectralMeasurePayload.from_measure(measure)
        self.store.save_json(run_id, "spectral_measure.json", payload)
        return JobResult.success(
            DecomposeOutcome(measure=payload, reconstruction_error=error, violations=violations)
        )
