import numpy as np

from mfnet.core.estimator.models import Dataset
from mfnet.core.exceptions import ContractViolationError
from mfnet.core.manifold import Manifold, sample_points
from mfnet.core.taylor import SmoothTarget


def generate_regression_data(
    manifold: Manifold, target: SmoothTarget, sigma: float, n: int, seed: int
) -> Dataset:
    """Draw X_i on the manifold and Y_i = f(X_i) + σ·ε_i with standard normal ε_i.

    Points and noise come from independent streams derived from `seed`.
    """
    if sigma < 0:
        raise ContractViolationError("noise level must be non-negative", sigma)
    xs = sample_points(manifold, n, [seed, 0])
    noise = np.random.default_rng([seed, 1]).standard_normal(n)
    return Dataset(xs=xs, ys=target(xs) + sigma * noise, seed=seed, sigma=sigma)
