from collections.abc import Sequence

import numpy as np

from mfnet.core.exceptions import ContractViolationError
from mfnet.core.manifold.models import Chart, Manifold

Seed = int | Sequence[int]


def sample_chart_params(
    manifold: Manifold, n: int, seed: Seed
) -> tuple[np.ndarray, np.ndarray]:
    """Draw chart indices uniformly and parameters uniformly on [0,1]^{d*}.

    Returns:
        Tuple of chart indices of shape (n,) and parameters of shape (n, d*)
    """
    if n < 1:
        raise ContractViolationError("at least one sample point is required", n)
    if not manifold.charts:
        raise ContractViolationError("cannot sample a manifold without charts")
    rng = np.random.default_rng(seed)
    charts = rng.integers(manifold.chart_count, size=n)
    params = rng.random((n, manifold.intrinsic_dim))
    return charts, params


def map_chart_params(
    manifold: Manifold, charts: np.ndarray, params: np.ndarray
) -> np.ndarray:
    """Map per-row chart indices and parameters onto the manifold."""
    points = np.empty((len(params), manifold.ambient_dim))
    for index, chart in enumerate(manifold.charts):
        mask = charts == index
        if np.any(mask):
            points[mask] = chart.map(params[mask])
    return points


def sample_points(manifold: Manifold, n: int, seed: Seed) -> np.ndarray:
    """Sample n points on the manifold, deterministically for a given seed.

    The distribution is the push-forward of the uniform parameter measure under a
    uniformly chosen chart, not the surface measure.

    Returns:
        Array of shape (n, d)
    """
    charts, params = sample_chart_params(manifold, n, seed)
    return map_chart_params(manifold, charts, params)


def verify_bilipschitz(chart: Chart, pairs: int, seed: Seed) -> tuple[float, float]:
    """Return the extreme ratios ‖ψ(t₁) − ψ(t₂)‖ / ‖t₁ − t₂‖ over random pairs."""
    if pairs < 1:
        raise ContractViolationError("at least one pair is required", pairs)
    rng = np.random.default_rng(seed)
    first = rng.random((pairs, chart.intrinsic_dim))
    second = rng.random((pairs, chart.intrinsic_dim))
    distance = np.linalg.norm(first - second, axis=1)
    keep = distance > 1e-12
    ratios = (
        np.linalg.norm(chart.map(first[keep]) - chart.map(second[keep]), axis=1)
        / distance[keep]
    )
    return float(np.min(ratios)), float(np.max(ratios))
