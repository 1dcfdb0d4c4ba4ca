from collections.abc import Callable

import numpy as np

from mfnet.core.estimator.models import TruncatedPredictor
from mfnet.core.exceptions import ContractViolationError
from mfnet.core.manifold import Manifold, sample_points
from mfnet.core.relu_net import Network
from mfnet.core.taylor import SmoothTarget


def truncate(net: Network, beta: float) -> TruncatedPredictor:
    """Clip the network output to [−β, β]."""
    if beta <= 0:
        raise ContractViolationError("truncation level must be positive", beta)
    return TruncatedPredictor(net=net, beta=beta)


def empirical_L2(
    predictor: Callable[[np.ndarray], np.ndarray],
    manifold: Manifold,
    target: SmoothTarget,
    n_test: int,
    seed: int,
) -> float:
    """Estimate ∫|m(x) − f(x)|² P_X(dx) on fresh manifold samples."""
    if n_test < 1:
        raise ContractViolationError("at least one test point is required", n_test)
    points = sample_points(manifold, n_test, [seed, 2])
    return float(np.mean((predictor(points) - target(points)) ** 2))
