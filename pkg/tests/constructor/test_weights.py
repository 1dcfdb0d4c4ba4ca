import numpy as np
import pytest

from mfnet.core.constructor import face_distance, fine_offsets, weight_w, weight_w_many
from mfnet.core.manifold import GridSpec


def test_weight_peaks_at_center_and_vanishes_on_faces() -> None:
    grid = GridSpec.unshifted(2, 2)

    assert weight_w([0.125, 0.375], grid) == 1.0
    assert weight_w([0.25, 0.3], grid) == 0.0
    assert weight_w([0.0625, 0.125], grid) == pytest.approx(0.5)


@pytest.mark.parametrize("dim", [1, 2, 3])
def test_weights_of_shifted_grids_sum_to_one(dim: int) -> None:
    points = np.random.default_rng(dim).uniform(-1.0, 1.0, size=(1000, dim))

    total = sum(weight_w_many(points, grid) for grid in GridSpec.all_shifts(4, dim))

    np.testing.assert_allclose(total, 1.0, atol=1e-12)


def test_offsets_and_face_distance() -> None:
    grid = GridSpec(M=2, shift=(0.125, 0.0))
    points = np.array([[0.2, 0.3], [0.125, -0.01]])

    np.testing.assert_allclose(fine_offsets(points, grid), [[0.075, 0.05], [0.0, 0.24]])
    np.testing.assert_allclose(face_distance(points, grid), [0.05, 0.0])
