from pathlib import Path

from src.app.settings import settings
from src.core.models.run_config import Command, RunConfig
from src.runtime.config import RuntimeConfig
from src.runtime.jobs.apply_job import ApplyJob
from src.runtime.jobs.audit_job import AuditJob
from src.runtime.jobs.besov_job import BesovJob
from src.runtime.jobs.counterexample_job import CounterexampleJob
from src.runtime.jobs.decompose_job import DecomposeJob
from src.runtime.jobs.scan_job import ScanJob
from src.runtime.jobs.verify_job import VerifyJob
from src.runtime.trial_runner import TrialRunner, default_worker_count
from src.storage.artifacts.artifact_store import ArtifactStore

Job = DecomposeJob | ApplyJob | VerifyJob | CounterexampleJob | ScanJob | BesovJob | AuditJob


def create_runtime_config() -> RuntimeConfig:
    """Create RuntimeConfig from application settings."""
    return RuntimeConfig(
        output_dir=Path(settings.output_dir),
        cluster_rel=settings.spectral_cluster_rel,
        normality_rel=settings.spectral_normality_rel,
        sinc_node_margin=settings.sinc_node_margin,
        audit_margin=settings.audit_margin,
        audit_atol=settings.audit_atol,
        identity_tolerance=settings.identity_tolerance,
        class_c_audit_constant=settings.class_c_audit_constant,
        sup_grid_oversampling=settings.sup_grid_oversampling,
        plane_fft_size=settings.plane_fft_size,
        plane_besov_depth=settings.plane_besov_depth,
        seed=settings.random_seed,
        workers=settings.trial_workers or default_worker_count(),
    )


def runtime_for(config: RunConfig, base: RuntimeConfig | None = None) -> RuntimeConfig:
    """Per-run overrides from the command line on top of the settings."""
    runtime = base or create_runtime_config()
    return runtime.with_overrides(
        seed=config.seed,
        output_dir=config.output_dir,
        workers=config.workers or None,
        identity_tolerance=config.tolerance,
    )


def create_artifact_store(runtime: RuntimeConfig) -> ArtifactStore:
    return ArtifactStore(runtime.output_dir)


def create_job(command: Command, runtime: RuntimeConfig, store: ArtifactStore) -> Job:
    runner = TrialRunner(runtime.workers)
    if command == Command.DECOMPOSE:
        return DecomposeJob(runtime, store)
    if command == Command.APPLY:
        return ApplyJob(runtime, store)
    if command == Command.VERIFY:
        return VerifyJob(runtime, store, runner)
    if command == Command.COUNTEREXAMPLE:
        return CounterexampleJob(runtime, store)
    if command == Command.SCAN:
        return ScanJob(runtime, store, runner)
    if command == Command.BESOV:
        return BesovJob(runtime, store)
    return AuditJob(runtime, store, runner)
