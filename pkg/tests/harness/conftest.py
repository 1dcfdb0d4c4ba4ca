from pathlib import Path

import pytest

from mfnet.core.harness import ExperimentConfig, parse_experiment_config

TINY_APPROX = {
    "kind": "approx_sweep",
    "manifold": "affine",
    "ambient_dim": "1",
    "target": "plane_wave",
    "target_q": "1",
    "grid_sizes": "2,3,4",
    "eval_points": "200",
    "output": "tiny_approx",
}
TINY_RATE = {
    "kind": "rate_sweep",
    "manifold": "affine",
    "ambient_dim": "2",
    "rotation_seed": "1",
    "target": "plane_wave",
    "sample_sizes": "20,40,80",
    "repetitions": "2",
    "seeds": "3,5",
    "noise": "0.1",
    "epochs": "5",
    "test_points": "100",
    "output": "tiny_rate",
}
TINY_DIMS = {
    "kind": "dim_study",
    "manifold": "circle",
    "ambient_dim": "2",
    "ambient_dims": "2,3",
    "target": "plane_wave",
    "sample_sizes": "30",
    "repetitions": "2",
    "epochs": "5",
    "test_points": "100",
    "output": "tiny_dims",
}


@pytest.fixture()
def approx_config() -> ExperimentConfig:
    return parse_experiment_config(dict(TINY_APPROX), "tiny approx")


@pytest.fixture()
def rate_config() -> ExperimentConfig:
    return parse_experiment_config(dict(TINY_RATE), "tiny rate")


@pytest.fixture()
def dims_config() -> ExperimentConfig:
    return parse_experiment_config(dict(TINY_DIMS), "tiny dims")


@pytest.fixture()
def approx_file(tmp_path: Path) -> Path:
    path = tmp_path / "tiny_approx.env"
    lines = [f"{key}={value}" for key, value in TINY_APPROX.items()]
    path.write_text("\n".join(["# tiny sweep", *lines, ""]))
    return path
