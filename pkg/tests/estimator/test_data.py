import numpy as np
import pytest

from mfnet.core.estimator import Dataset, generate_regression_data
from mfnet.core.exceptions import ContractViolationError
from mfnet.core.manifold import Manifold
from mfnet.core.taylor import SmoothTarget


def test_noiseless_data(circle: Manifold, plane_wave: SmoothTarget) -> None:
    data = generate_regression_data(circle, plane_wave, 0.0, 50, 4)

    assert data.n == 50
    assert data.xs.shape == (50, 3)
    np.testing.assert_array_equal(data.ys, plane_wave(data.xs))


def test_data_is_seeded(circle: Manifold, plane_wave: SmoothTarget) -> None:
    first = generate_regression_data(circle, plane_wave, 0.5, 50, 4)
    second = generate_regression_data(circle, plane_wave, 0.5, 50, 4)
    other = generate_regression_data(circle, plane_wave, 0.5, 50, 5)

    assert first.checksum() == second.checksum()
    assert first.checksum() != other.checksum()
    noise = first.ys - plane_wave(first.xs)
    assert 0.2 < np.std(noise) < 0.8


def test_data_rejects_negative_noise(
    circle: Manifold, plane_wave: SmoothTarget
) -> None:
    with pytest.raises(ContractViolationError, match="non-negative"):
        generate_regression_data(circle, plane_wave, -1.0, 10, 0)


def test_dataset_checks_lengths() -> None:
    with pytest.raises(ContractViolationError, match="responses"):
        Dataset(xs=np.zeros((3, 2)), ys=np.zeros(2), seed=0, sigma=0.0)
