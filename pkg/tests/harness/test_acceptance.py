from pathlib import Path

import pytest

from mfnet.core.constructor import build_fhat_net
from mfnet.core.harness import (
    ExperimentConfig,
    build_problem,
    load_experiment_config,
    run_approx_sweep,
    run_dim_study,
    run_rate_sweep,
)

EXPERIMENTS = Path(__file__).parents[2] / "assets" / "experiments"


def shipped(name: str) -> ExperimentConfig:
    return load_experiment_config(EXPERIMENTS / f"{name}.env")


@pytest.mark.integration
def test_approx_sweep_slope() -> None:
    report = run_approx_sweep(shipped("approx_sweep"))

    assert not report.flagged
    assert report.slope is not None
    assert report.slope.slope <= -3.5


@pytest.mark.integration
def test_fhat_net_width_per_doubling() -> None:
    config = shipped("approx_sweep")
    manifold, target = build_problem(config.manifold, config)

    widths = [build_fhat_net(target, manifold, M).width for M in (2, 4, 8)]

    for coarse, fine in zip(widths, widths[1:]):
        assert 1.5 <= fine / coarse <= 3.0


@pytest.mark.integration
def test_rate_sweep_follows_intrinsic_dimension() -> None:
    report = run_rate_sweep(shipped("rate_sweep"))

    assert report.slope is not None
    assert abs(report.slope.slope + 0.8) < abs(report.slope.slope + 4 / 7)


@pytest.mark.integration
def test_dim_study_ignores_ambient_dimension() -> None:
    report = run_dim_study(shipped("dim_study"))

    assert 1 / 3 <= float(report.extras["median_ratio"]) <= 3.0
    assert report.extras["arch_d3"] == report.extras["arch_d10"]
