from __future__ import annotations

import math
from dataclasses import dataclass, field

from src.besov.filters import make_filter
from src.besov.plane import besov_norm_plane_dyadic
from src.besov.torus import PERIOD_TOL, besov_norm_upper, lp_decompose_torus
from src.core.errors import NoConvergence, OperatorLabError
from src.core.logging_helpers import stage_timer
from src.core.models.run_config import RunConfig
from src.funcalc.functions import TWO_PI, TrigPoly, TrigPoly1D
from src.runtime.config import RuntimeConfig
from src.runtime.jobs.inputs import InputFileError, load_trig_poly
from src.runtime.jobs.job_result import JobResult
from src.storage.artifacts.artifact_store import ArtifactStore

LEVEL_COLUMNS = ("level", "sup_lower", "sup_upper", "weighted")


@dataclass
class BesovOutcome:
    domain: str
    norm: float
    upper: float | None = None
    scale: int = 0
    # level -> (grid sup, upper sup estimate); torus functions only
    levels: dict[int, tuple[float, float]] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return True


def _on_torus(f: TrigPoly | TrigPoly1D) -> bool:
    if isinstance(f, TrigPoly1D):
        return abs(f.period - TWO_PI) <= PERIOD_TOL
    return f.is_torus


class BesovJob:
    """B¹_{∞,1} norm of a trigonometric polynomial read from --trigpoly."""

    def __init__(self, runtime: RuntimeConfig, store: ArtifactStore) -> None:
        self.runtime = runtime
        self.store = store

    def _torus(self, f: TrigPoly | TrigPoly1D) -> BesovOutcome:
        bank = make_filter()
        oversampling = self.runtime.sup_grid_oversampling
        decomposition = lp_decompose_torus(f, bank, oversampling)
        levels = {
            n: (decomposition.norms[n].lower, decomposition.norms[n].upper)
            for n in decomposition.levels
        }
        norm = math.fsum(2.0**n * lower for n, (lower, _) in levels.items())
        return BesovOutcome(
            domain="torus",
            norm=norm,
            upper=besov_norm_upper(f, bank, oversampling),
            levels=levels,
        )

    def _plane(self, f: TrigPoly, scale: int) -> BesovOutcome:
        norm = besov_norm_plane_dyadic(
            f,
            scale,
            fft_size=self.runtime.plane_fft_size,
            depth=self.runtime.plane_besov_depth,
            oversampling=self.runtime.sup_grid_oversampling,
        )
        return BesovOutcome(domain="plane", norm=norm, scale=scale)

    def run(self, config: RunConfig, run_id: str) -> JobResult[BesovOutcome]:
        if config.trigpoly is None:
            return JobResult.failure("besov needs a trigonometric polynomial file", flag="--trigpoly")
        try:
            f = load_trig_poly(config.trigpoly, "--trigpoly")
            with stage_timer("besov_norm", scale=config.besov_scale):
                if _on_torus(f) and config.besov_scale == 0:
                    outcome = self._torus(f)
                elif isinstance(f, TrigPoly):
                    outcome = self._plane(f, config.besov_scale)
                else:
                    raise InputFileError(
                        "--trigpoly", "univariate polynomials need period 2π and --scale 0"
                    )
        except InputFileError as e:
            return JobResult.failure(str(e), flag=e.flag)
        except NoConvergence as e:
            return JobResult.failure(str(e))
        except OperatorLabError as e:
            return JobResult.failure(f"--trigpoly: {e}", flag="--trigpoly")

        if outcome.levels:
            rows = (
                {"level": n, "sup_lower": lower, "sup_upper": upper, "weighted": 2.0**n * lower}
                for n, (lower, upper) in outcome.levels.items()
            )
            self.store.save_csv(run_id, "besov_levels.csv", rows, LEVEL_COLUMNS)
        self.store.save_json(
            run_id,
            "besov.json",
            {"domain": outcome.domain, "norm": outcome.norm, "upper": outcome.upper, "scale": outcome.scale},
        )
        return JobResult.success(outcome)
