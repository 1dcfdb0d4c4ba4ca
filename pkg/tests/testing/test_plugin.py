from enum import Enum
from pathlib import Path

import numpy as np

from mfnet.core.manifold import GridSpec, Manifold
from mfnet.core.settings import BaseSettings
from mfnet.core.taylor import SmoothTarget
from mfnet.core.types import PreconditionPolicy


def test_work_dir_is_isolated(tmp_path: Path, settings: BaseSettings) -> None:
    assert settings.work_dir == tmp_path
    assert settings.jobs == 1


def test_enum_reprs_are_patched() -> None:
    assert repr(PreconditionPolicy.WARN) == "PreconditionPolicy.WARN"
    assert isinstance(PreconditionPolicy.WARN, Enum)


def test_rng_is_seeded(rng: np.random.Generator) -> None:
    assert rng.random() == np.random.default_rng(42).random()


def test_domain_fixtures(
    circle: Manifold, plane_wave: SmoothTarget, segment: Manifold, grid: GridSpec
) -> None:
    assert (circle.ambient_dim, circle.intrinsic_dim) == (3, 1)
    assert plane_wave.dim == circle.ambient_dim
    assert segment.chart_count == 1
    assert grid.dim == 3
