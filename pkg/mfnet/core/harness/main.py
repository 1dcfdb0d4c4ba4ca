from collections.abc import Callable

from mfnet.core.cli import entrypoint
from mfnet.core.exceptions import ConfigError, ContractViolationError
from mfnet.core.harness.config import load_experiment_config
from mfnet.core.harness.invariants import run_invariants
from mfnet.core.harness.models import ExperimentConfig, ExperimentReport
from mfnet.core.harness.reporting import write_invariants, write_report
from mfnet.core.harness.settings import ExperimentSettings
from mfnet.core.harness.sweeps import run_approx_sweep, run_dim_study, run_rate_sweep
from mfnet.core.logging import echo


def _load() -> ExperimentConfig:
    settings = ExperimentSettings.get()
    if settings.config is None:
        raise ConfigError(
            "no experiment config given", ExperimentSettings.get_env_name("config")
        )
    return load_experiment_config(settings.config)


def _run(sweep: Callable[[ExperimentConfig], ExperimentReport]) -> None:
    report = sweep(_load())
    for _ in write_report(report):
        pass
    echo(str(report), fg="green")


@entrypoint(ExperimentSettings)
def approx() -> None:
    """Measure the sup error of the constructed network over grid sizes M."""
    _run(run_approx_sweep)


@entrypoint(ExperimentSettings)
def rate() -> None:
    """Measure the L2 error of the trained estimator over sample sizes n."""
    _run(run_rate_sweep)


@entrypoint(ExperimentSettings)
def dims() -> None:
    """Compare the estimator on one manifold embedded in several dimensions."""
    _run(run_dim_study)


@entrypoint(ExperimentSettings)
def invariants() -> None:
    """Run the property suite and write its outcome to invariants.csv."""
    results = list(run_invariants())
    for _ in write_invariants(results):
        pass
    failed = [result.name for result in results if not result.passed]
    if failed:
        raise ContractViolationError("invariants failed", *failed)
