import platform
from collections.abc import Callable, Generator, Iterable, Sequence
from concurrent.futures import ProcessPoolExecutor
from typing import Any, TypeVar

import numpy as np

from mfnet.core.constructor import build_fhat_net
from mfnet.core.estimator import (
    EstimatorConfig,
    empirical_L2,
    generate_regression_data,
    train,
    truncate,
)
from mfnet.core.exceptions import ConfigError, MFNetError
from mfnet.core.harness.models import (
    ExperimentConfig,
    ExperimentReport,
    ReportRow,
    SlopeFit,
    SummaryRow,
    TrainingCurve,
)
from mfnet.core.harness.slopes import fit_slope
from mfnet.core.logging import echo, warn, watch
from mfnet.core.manifold import Manifold, ManifoldSpec, build_manifold, sample_points
from mfnet.core.relu_net import evaluate_scalar
from mfnet.core.settings import BaseSettings
from mfnet.core.taylor import SmoothTarget, build_target
from mfnet.core.types import ExperimentKind

ResultT = TypeVar("ResultT")


def sub_seed(master: int, seed: int, position: int) -> int:
    """Derive the seed of the sub-run at sweep `position` from the master seed."""
    state = np.random.SeedSequence([abs(master), seed, position]).generate_state(1)
    return int(state[0])


def build_problem(
    spec: ManifoldSpec, config: ExperimentConfig
) -> tuple[Manifold, SmoothTarget]:
    """Build the manifold and the target pulled back onto its native coordinates."""
    manifold = build_manifold(spec)
    return manifold, build_target(config.target, spec, manifold.bound)


def environment_stamp() -> dict[str, str]:
    """Describe the interpreter and numerics library the report was produced with."""
    return {
        "python": platform.python_version(),
        "numpy": np.__version__,
        "platform": platform.platform(),
    }


def _check_guards(config: ExperimentConfig) -> None:
    settings = BaseSettings.get()
    if max(config.grid_sizes, default=2) > settings.max_grid_size:
        raise ConfigError("grid size above guard", settings.max_grid_size)
    if max(config.sample_sizes, default=2) > settings.max_sample_size:
        raise ConfigError("sample size above guard", settings.max_sample_size)
    dims = [config.manifold.ambient_dim, *config.ambient_dims]
    if max(dims) > settings.max_ambient_dim:
        raise ConfigError("ambient dimension above guard", settings.max_ambient_dim)


def run_tasks(
    func: Callable[..., ResultT], arguments: Sequence[tuple[Any, ...]]
) -> list[ResultT]:
    """Run `func` once per argument tuple on `jobs` worker processes.

    Results come back in the order of `arguments`; a single job runs inline.
    """
    jobs = BaseSettings.get().jobs
    if jobs == 1 or len(arguments) == 1:
        return [func(*args) for args in arguments]
    with ProcessPoolExecutor(max_workers=jobs) as executor:
        futures = [executor.submit(func, *args) for args in arguments]
        return [future.result() for future in futures]


@watch
def collect_rows(
    batches: Iterable[Sequence[ReportRow]],
) -> Generator[ReportRow, None, None]:
    """Flatten the row batches of all sub-runs."""
    for batch in batches:
        yield from batch


def summarize(
    rows: Sequence[ReportRow], params: Sequence[float]
) -> tuple[SummaryRow, ...]:
    """Return median, minimum and maximum of the unflagged errors per parameter."""
    summary = []
    for param in params:
        errors = [
            row.error
            for row in rows
            if row.param == param and row.error is not None and not row.flag
        ]
        if errors:
            summary.append(
                SummaryRow(
                    param=param,
                    median=float(np.median(errors)),
                    min=min(errors),
                    max=max(errors),
                )
            )
        else:
            nan = float("nan")
            summary.append(SummaryRow(param=param, median=nan, min=nan, max=nan))
    return tuple(summary)


def _slope(summary: Sequence[SummaryRow]) -> SlopeFit | None:
    finite = [(row.param, row.median) for row in summary if np.isfinite(row.median)]
    if len(finite) < 3 or any(value <= 0 for _, value in finite):
        return None
    return fit_slope(finite)


def approx_task(
    config: ExperimentConfig, M: int, position: int
) -> tuple[ReportRow, ...]:
    """Build the shifted-grid network for one M and measure its sup error per seed."""
    master = BaseSettings.get().seed
    seeds = [config.seed_for(rep) for rep in range(config.repetitions)]
    try:
        manifold, target = build_problem(config.manifold, config)
        report = build_fhat_net(target, manifold, M, jobs=1)
    except MFNetError as error:
        warn(f"[approx sweep] M={M} failed: {error}")
        return tuple(
            ReportRow(param=M, rep=rep, seed=seed, flag=type(error).__name__)
            for rep, seed in enumerate(seeds)
        )
    rows = []
    for rep, seed in enumerate(seeds):
        points = sample_points(
            manifold, config.eval_points, sub_seed(master, seed, position)
        )
        error = np.max(np.abs(evaluate_scalar(report.net, points) - target(points)))
        rows.append(ReportRow(param=M, rep=rep, seed=seed, error=float(error)))
    return tuple(rows)


def run_approx_sweep(config: ExperimentConfig) -> ExperimentReport:
    """Measure the sup error of the shifted-grid network over the grid sizes.

    The error is the maximum over `eval_points` chart-sampled points, boundary
    bands included; the slope is fitted on the log-log medians.
    """
    if config.kind is not ExperimentKind.APPROX_SWEEP:
        raise ConfigError("not an approximation sweep", config.kind.value)
    _check_guards(config)
    batches = run_tasks(
        approx_task,
        [(config, M, position) for position, M in enumerate(config.grid_sizes)],
    )
    rows = tuple(collect_rows(batches))
    summary = summarize(rows, config.grid_sizes)
    return ExperimentReport(
        config=config,
        rows=rows,
        summary=summary,
        slope=_slope(summary),
        environment=environment_stamp(),
    )


def estimator_config(
    config: ExperimentConfig, n: int, p: float, d_star: int, seed: int
) -> EstimatorConfig:
    """Return the estimator of a sample of size n in a sweep."""
    return EstimatorConfig.create(
        n,
        p,
        d_star,
        config.c2,
        config.c3,
        config.c4,
        learning_rate=config.learning_rate,
        momentum=config.momentum,
        epochs=config.epochs,
        batch_size=config.batch_size,
        seed=seed,
    )


def rate_task(
    config: ExperimentConfig,
    spec: ManifoldSpec,
    param: float,
    n: int,
    rep: int,
    position: int,
) -> tuple[ReportRow, TrainingCurve | None]:
    """Fit, truncate and test the estimator on one sample."""
    seed = config.seed_for(rep)
    stream = sub_seed(BaseSettings.get().seed, seed, position)
    try:
        manifold, target = build_problem(spec, config)
        data = generate_regression_data(manifold, target, config.noise, n, stream)
        estimator = estimator_config(
            config, n, target.p, manifold.intrinsic_dim, stream
        )
        run = train(data, estimator)
        predictor = truncate(run.net, estimator.beta_n)
        error = empirical_L2(predictor, manifold, target, config.test_points, stream)
    except MFNetError as error:
        warn(f"[rate sweep] n={n} rep={rep} failed: {error}")
        row = ReportRow(param=param, rep=rep, seed=seed, flag=type(error).__name__)
        return row, None
    curve = TrainingCurve(param=param, rep=rep, losses=run.curve)
    return ReportRow(param=param, rep=rep, seed=seed, error=error), curve


def _fit_all(
    arguments: list[tuple[Any, ...]],
) -> tuple[tuple[ReportRow, ...], tuple[TrainingCurve, ...]]:
    results = run_tasks(rate_task, arguments)
    rows = tuple(collect_rows([row] for row, _ in results))
    curves = tuple(curve for _, curve in results if curve is not None)
    return rows, curves


def run_rate_sweep(config: ExperimentConfig) -> ExperimentReport:
    """Measure the empirical L₂ error of the truncated estimator over sample sizes.

    Every (n, repetition) pair is an independent fit; the slope is fitted on the
    log-log medians over the repetitions.
    """
    if config.kind is not ExperimentKind.RATE_SWEEP:
        raise ConfigError("not a rate sweep", config.kind.value)
    _check_guards(config)
    arguments = [
        (config, config.manifold, n, n, rep, position)
        for position, n in enumerate(config.sample_sizes)
        for rep in range(config.repetitions)
    ]
    rows, curves = _fit_all(arguments)
    summary = summarize(rows, config.sample_sizes)
    return ExperimentReport(
        config=config,
        rows=rows,
        summary=summary,
        slope=_slope(summary),
        curves=curves,
        environment=environment_stamp(),
    )


def run_dim_study(config: ExperimentConfig) -> ExperimentReport:
    """Compare the estimator on one manifold embedded in several ambient dimensions.

    Repetitions share their seeds across dimensions, so the paired fits see the
    same intrinsic sample. Rows are keyed by the ambient dimension; the extras
    hold the ratio of the last to the first median and the architecture per
    dimension.
    """
    if config.kind is not ExperimentKind.DIM_STUDY:
        raise ConfigError("not a dimension study", config.kind.value)
    _check_guards(config)
    n = config.sample_sizes[0]
    specs = [
        config.manifold.model_copy(update={"ambient_dim": d})
        for d in config.ambient_dims
    ]
    arguments = [
        (config, spec, spec.ambient_dim, n, rep, 0)
        for spec in specs
        for rep in range(config.repetitions)
    ]
    rows, curves = _fit_all(arguments)
    summary = summarize(rows, config.ambient_dims)
    extras = {}
    for spec in specs:
        manifold, target = build_problem(spec, config)
        estimator = estimator_config(config, n, target.p, manifold.intrinsic_dim, 0)
        extras[f"arch_d{spec.ambient_dim}"] = f"{estimator.L_n},{estimator.r_n}"
    first, last = summary[0].median, summary[-1].median
    extras["median_ratio"] = repr(last / first if first else float("nan"))
    echo(f"[dim study] median ratio {extras['median_ratio']}")
    return ExperimentReport(
        config=config,
        rows=rows,
        summary=summary,
        curves=curves,
        extras=extras,
        environment=environment_stamp(),
    )
