from __future__ import annotations

from dataclasses import dataclass

from src.core.errors import NoConvergence, OperatorLabError
from src.core.logging_helpers import stage_timer
from src.core.models.matrix_payload import MatrixPayload
from src.core.models.run_config import RunConfig
from src.funcalc.calculus import apply_f
from src.funcalc.functions import TrigPoly1D
from src.matcore.dense import DenseMatrix, frobenius
from src.matcore.spectral import SpectralKind, SpectralMeasure, spectral_decompose
from src.runtime.config import RuntimeConfig
from src.runtime.jobs.inputs import InputFileError, load_matrix, load_trig_poly
from src.runtime.jobs.job_result import JobResult
from src.storage.artifacts.artifact_store import ArtifactStore


@dataclass
class ApplyOutcome:
    result: MatrixPayload
    frobenius_norm: float

    @property
    def passed(self) -> bool:
        return True


class ApplyJob:
    """f(A, B) for a trigonometric polynomial f and matrices read from files."""

    def __init__(self, runtime: RuntimeConfig, store: ArtifactStore) -> None:
        self.runtime = runtime
        self.store = store

    def _measure(self, matrix: DenseMatrix, kind: SpectralKind, flag: str) -> SpectralMeasure:
        tolerance = self.runtime.normality_rel * max(frobenius(matrix), 1.0)
        try:
            return spectral_decompose(matrix, kind, tol=tolerance, cluster_rel=self.runtime.cluster_rel)
        except NoConvergence:
            raise
        except OperatorLabError as e:
            raise InputFileError(flag, str(e)) from e

    def run(self, config: RunConfig, run_id: str) -> JobResult[ApplyOutcome]:
        if config.matrix is None or config.matrix_b is None or config.trigpoly is None:
            return JobResult.failure("apply needs --matrix, --matrix-b and --trigpoly", flag="--matrix")
        try:
            a = load_matrix(config.matrix, "--matrix")
            b = load_matrix(config.matrix_b, "--matrix-b")
            f = load_trig_poly(config.trigpoly, "--trigpoly")
            if isinstance(f, TrigPoly1D):
                raise InputFileError("--trigpoly", "f(A, B) needs a bivariate polynomial (two periods)")
            if a.shape != b.shape:
                raise InputFileError("--matrix-b", f"B is {b.shape[0]}x{b.shape[1]} but A is {a.shape[0]}x{a.shape[1]}")

            with stage_timer("decompose_pair", kind=config.spectral_kind.value, dim=a.shape[0]):
                sm_a = self._measure(a, config.spectral_kind, "--matrix")
                sm_b = self._measure(b, config.spectral_kind, "--matrix-b")

            with stage_timer("apply_f"):
                try:
                    value = apply_f(f, sm_a, sm_b)
                except NoConvergence:
                    raise
                except OperatorLabError as e:
                    raise InputFileError("--trigpoly", str(e)) from e
        except InputFileError as e:
            return JobResult.failure(str(e), flag=e.flag)
        except OperatorLabError as e:
            return JobResult.failure(str(e))

        payload = MatrixPayload.from_array(value)
        self.store.save_json(run_id, "f_AB.json", payload)
        return JobResult.success(ApplyOutcome(result=payload, frobenius_norm=frobenius(value)))
