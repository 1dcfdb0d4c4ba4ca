from pathlib import Path
from typing import Any

from dotenv import dotenv_values
from pydantic import ValidationError

from mfnet.core.exceptions import ConfigError
from mfnet.core.harness.models import ExperimentConfig
from mfnet.core.logging import echo

# config keys routed into the nested specs, with their field names there
MANIFOLD_KEYS = {
    "manifold": "kind",
    "ambient_dim": "ambient_dim",
    "intrinsic_dim": "intrinsic_dim",
    "radius": "radius",
    "offset": "offset",
    "chart_count": "chart_count",
    "rotation_seed": "rotation_seed",
}
TARGET_KEYS = {
    "target": "kind",
    "target_q": "q",
    "target_frequencies": "frequencies",
    "target_phase": "phase",
    "target_amplitude": "amplitude",
}
LIST_KEYS = {
    "offset",
    "target_frequencies",
    "grid_sizes",
    "sample_sizes",
    "ambient_dims",
    "seeds",
}


def _split(value: str) -> list[str]:
    return [item.strip() for item in value.split(",") if item.strip()]


def parse_experiment_config(values: dict[str, str | None], source: str) -> ExperimentConfig:
    """Validate flat `key=value` pairs into an experiment config.

    Raises:
        ConfigError: When a key is unknown or a value does not validate
    """
    known = set(MANIFOLD_KEYS) | set(TARGET_KEYS) | set(ExperimentConfig.model_fields)
    manifold: dict[str, Any] = {}
    target: dict[str, Any] = {}
    top: dict[str, Any] = {}
    for key, raw in values.items():
        key = key.strip().lower()
        if key not in known:
            raise ConfigError(f"unknown key in {source}", key)
        if not raw:
            continue
        value: Any = _split(raw) if key in LIST_KEYS else raw
        if key in MANIFOLD_KEYS:
            manifold[MANIFOLD_KEYS[key]] = value
        elif key in TARGET_KEYS:
            target[TARGET_KEYS[key]] = value
        else:
            top[key] = value
    try:
        return ExperimentConfig.model_validate(
            {**top, "manifold": manifold, "target": target}
        )
    except ValidationError as error:
        first = error.errors()[0]
        location = ".".join(str(part) for part in first["loc"])
        raise ConfigError(f"invalid value in {source}", location, first["msg"]) from error


def load_experiment_config(path: Path | str) -> ExperimentConfig:
    """Read a dotenv-style experiment config file.

    Lines are `KEY=value` pairs, blank lines and `#` comments are skipped and list
    values are comma-separated.

    Raises:
        ConfigError: When the file is missing or malformed
    """
    path = Path(path)
    if not path.is_file():
        raise ConfigError("config file not found", path.as_posix())
    config = parse_experiment_config(
        dict(dotenv_values(path, interpolate=False)), path.as_posix()
    )
    echo(f"[load experiment config] {path.as_posix()} {config.kind.value}")
    return config
