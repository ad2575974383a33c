import argparse
from pathlib import Path
from typing import Any

from pydantic import ValidationError
from rich.console import Console

from src.app.settings import settings
from src.app.wiring import create_artifact_store, create_job, create_runtime_config, runtime_for
from src.core.models.identity_report import IdentityKind
from src.core.models.run_config import Command, MissingInputs, RunConfig, ScanFamily
from src.core.models.schatten_report import BoundKind
from src.matcore.spectral import SpectralKind
from src.runtime.jobs.apply_job import ApplyOutcome
from src.runtime.jobs.audit_job import AuditOutcome
from src.runtime.jobs.besov_job import BesovOutcome
from src.runtime.jobs.counterexample_job import CounterexampleOutcome
from src.runtime.jobs.decompose_job import DecomposeOutcome
from src.runtime.jobs.scan_job import ScanOutcome
from src.runtime.jobs.verify_job import VerifyOutcome
from src.runtime.preflight import run_preflight
from src.storage.artifacts.artifact_store import new_run_id
from src.ui.cli.renderers.audit_renderer import render_audit_summary
from src.ui.cli.renderers.besov_renderer import render_besov
from src.ui.cli.renderers.identity_renderer import render_identity_summary
from src.ui.cli.renderers.scan_renderer import render_scan_records, render_slopes
from src.ui.cli.renderers.spectral_renderer import render_spectral_measure
from src.utils.logging_setup import setup_logging

EXIT_OK = 0
EXIT_FAILED_VERDICT = 1
EXIT_USAGE = 2

console = Console()
err_console = Console(stderr=True)

# RunConfig field -> command-line flag, for usage errors
FLAGS = {
    "identity": "identity",
    "matrix": "--matrix",
    "matrix_b": "--matrix-b",
    "trigpoly": "--trigpoly",
    "spectral_kind": "--kind",
    "n_list": "--N",
    "p_list": "--p",
    "epsilon_list": "--epsilon",
    "dims": "--dims",
    "trials": "--trials",
    "family": "--family",
    "bound_kind": "--kind",
    "q": "--q",
    "alpha": "--alpha",
    "beta": "--beta",
    "besov_scale": "--scale",
    "seed": "--seed",
    "tolerance": "--tolerance",
    "output_dir": "--output-dir",
    "workers": "--workers",
}

Outcome = (
    DecomposeOutcome
    | ApplyOutcome
    | VerifyOutcome
    | CounterexampleOutcome
    | ScanOutcome
    | BesovOutcome
    | AuditOutcome
)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", type=Path, help="JSON file mirroring the run configuration")
    common.add_argument("--seed", help="64-bit seed, decimal or 0x-prefixed. Default: RANDOM_SEED")
    common.add_argument("--output-dir", type=Path, help="Artifact directory. Default: OUTPUT_DIR")
    common.add_argument("--workers", type=int, help="Trial workers; 0 uses the physical core count")
    common.add_argument("--tolerance", type=float, help="Residual tolerance of identity checks")
    common.add_argument("--verbose", action="store_true", help="Debug output on the console")

    parser = argparse.ArgumentParser(
        prog="operator-lab",
        description="Functional calculus laboratory for noncommuting operator pairs",
    )
    subparsers = parser.add_subparsers(dest="command")
    kinds = [kind.value for kind in SpectralKind]

    decompose_parser = subparsers.add_parser("decompose", parents=[common], help="Spectral measure of a matrix")
    decompose_parser.add_argument("--matrix", type=Path, help="Matrix JSON file")
    decompose_parser.add_argument("--kind", dest="spectral_kind", choices=kinds, help="Default: hermitian")

    apply_parser = subparsers.add_parser("apply", parents=[common], help="f(A, B) from files")
    apply_parser.add_argument("--matrix", type=Path, help="Matrix JSON file for A")
    apply_parser.add_argument("--matrix-b", dest="matrix_b", type=Path, help="Matrix JSON file for B")
    apply_parser.add_argument("--trigpoly", type=Path, help="Trigonometric polynomial JSON file")
    apply_parser.add_argument("--kind", dest="spectral_kind", choices=kinds, help="Default: hermitian")

    verify_parser = subparsers.add_parser("verify", parents=[common], help="Perturbation identities")
    verify_parser.add_argument(
        "identity",
        nargs="?",
        choices=IdentityKind.selectors(),
        help="pair (7.1), unitary (12.1) or base-point (10.2)",
    )
    verify_parser.add_argument("--dims", help="Comma-separated dimensions, e.g. 2,4,8")
    verify_parser.add_argument("--trials", type=int, help="Random instances. Default: 1")
    verify_parser.add_argument("--p", dest="p_list", help="Exponents for base-point Lipschitz ratios")
    verify_parser.add_argument("--matrix", type=Path, help="Base-point check on a given A")
    verify_parser.add_argument("--matrix-b", dest="matrix_b", type=Path, help="... and a given B")
    verify_parser.add_argument("--trigpoly", type=Path, help="... and a given f")
    verify_parser.add_argument("--alpha", type=float, help="Base point αI. Default: 0")
    verify_parser.add_argument("--beta", type=float, help="Base point βI. Default: 0")

    counterexample_parser = subparsers.add_parser(
        "counterexample", parents=[common], help="Growth law of the DFT family"
    )
    counterexample_parser.add_argument("--N", dest="n_list", help="Comma-separated sizes, e.g. 4,16,64")
    counterexample_parser.add_argument("--p", dest="p_list", help="Comma-separated exponents, inf allowed")
    counterexample_parser.add_argument("--epsilon", dest="epsilon_list", help="Rescalings, e.g. 0.5,0.25")

    scan_parser = subparsers.add_parser("scan", parents=[common], help="Lipschitz-ratio scans")
    scan_parser.add_argument("--family", choices=[family.value for family in ScanFamily])
    scan_parser.add_argument("--N", dest="n_list", help="Comma-separated sizes")
    scan_parser.add_argument("--p", dest="p_list", help="Comma-separated exponents, inf allowed")
    scan_parser.add_argument("--trials", type=int, help="Random instances per size. Default: 1")

    besov_parser = subparsers.add_parser("besov", parents=[common], help="B¹∞,1 norm of a trig polynomial")
    besov_parser.add_argument("--trigpoly", type=Path, help="Trigonometric polynomial JSON file")
    besov_parser.add_argument("--scale", dest="besov_scale", type=int, help="Dyadic rescaling ε = 2^-m (plane)")

    audit_parser = subparsers.add_parser("audit", parents=[common], help="Schatten bound audits")
    audit_parser.add_argument("--kind", dest="bound_kind", choices=[kind.value for kind in BoundKind])
    audit_parser.add_argument("--dims", help="Comma-separated dimensions")
    audit_parser.add_argument("--p", dest="p_list", help="Comma-separated exponents, inf allowed")
    audit_parser.add_argument("--q", help="Second exponent where the bound takes one")
    audit_parser.add_argument("--trials", type=int, help="Random instances. Default: 1")

    return parser


def _usage_error(message: str) -> int:
    err_console.print(f"[red]error:[/red] {message}", highlight=False)
    return EXIT_USAGE


def _describe_validation_error(error: ValidationError) -> str:
    messages: list[str] = []
    for detail in error.errors():
        cause = detail.get("ctx", {}).get("error")
        if isinstance(cause, MissingInputs):
            flags = ", ".join(FLAGS.get(name, name) for name in cause.fields)
            messages.append(f"missing {flags}")
            continue
        location = detail["loc"][0] if detail["loc"] else ""
        flag = FLAGS.get(str(location), str(location))
        messages.append(f"{flag}: {detail['msg']}")
    return "; ".join(messages)


def _render(outcome: Outcome, verbose: bool) -> None:
    if isinstance(outcome, DecomposeOutcome):
        console.print(render_spectral_measure(outcome.measure, outcome.reconstruction_error))
        for violation in outcome.violations:
            console.print(f"[red]violated: {violation}[/red]")
    elif isinstance(outcome, ApplyOutcome):
        console.print(f"‖f(A,B)‖_F = {outcome.frobenius_norm:.12g}")
    elif isinstance(outcome, VerifyOutcome):
        console.print(render_identity_summary(outcome.summary))
    elif isinstance(outcome, (CounterexampleOutcome, ScanOutcome)):
        console.print(render_scan_records(outcome.records))
        console.print(render_slopes(outcome.slopes))
    elif isinstance(outcome, BesovOutcome):
        console.print(f"{outcome.norm:.12g}")
        if verbose:
            console.print(render_besov(outcome))
    else:
        console.print(render_audit_summary(outcome.reports))
        if outcome.failures:
            console.print(f"[red]{len(outcome.failures)} of {len(outcome.reports)} audits failed[/red]")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_request:
        return int(exit_request.code or 0)

    if args.command is None:
        parser.print_help()
        return EXIT_USAGE

    # Configure logging before any operations
    verbose: bool = args.verbose
    setup_logging(verbose=verbose)

    from loguru import logger

    run_preflight(settings, logger, verbose=verbose)

    flags: dict[str, Any] = {
        key: value for key, value in vars(args).items() if key not in {"config", "verbose"}
    }
    base_runtime = create_runtime_config()
    try:
        config = RunConfig.resolve(flags, args.config, defaults={"seed": base_runtime.seed})
    except ValidationError as e:
        return _usage_error(_describe_validation_error(e))
    except (OSError, ValueError) as e:
        return _usage_error(f"--config: {e}")

    runtime = runtime_for(config, base_runtime)
    store = create_artifact_store(runtime)
    run_id = new_run_id(config.command.value)
    job = create_job(Command(config.command), runtime, store)

    result = job.run(config, run_id)
    if not result.ok or result.value is None:
        if result.flag is not None:
            return _usage_error(result.error)
        err_console.print(f"[red]{config.command.value} failed:[/red] {result.error}", highlight=False)
        return EXIT_FAILED_VERDICT

    store.save_json(run_id, "run_config.json", config)
    _render(result.value, verbose)
    console.print(f"[dim]Artifacts: {store.run_dir(run_id)}[/dim]")
    return EXIT_OK if result.value.passed else EXIT_FAILED_VERDICT


if __name__ == "__main__":
    raise SystemExit(main())
