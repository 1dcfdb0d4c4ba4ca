import numpy as np
import pytest

from mfnet.core.manifold import FunctionChart, Manifold


@pytest.fixture
def plane_segment() -> Manifold:
    """Return the segment t ↦ (0.1 + t, 0.1) in the plane."""
    chart = FunctionChart(
        func=lambda t: np.column_stack([0.1 + t[:, 0], np.full(len(t), 0.1)]),
        dims=(1, 2),
        constants=(1.0, 1.0),
    )
    return Manifold(charts=(chart,), ambient_dim=2, intrinsic_dim=1, bound=2.0)
