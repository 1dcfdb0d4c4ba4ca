import math
from functools import cache
from itertools import product

import numpy as np


@cache
def multi_indices(dim: int, degree: int) -> tuple[tuple[int, ...], ...]:
    """Return all multi-indices j ∈ N₀^dim with ‖j‖₁ ≤ degree.

    The order is graded lexicographic: total degree ascending, and within one
    degree lexicographically descending, e.g. (0,0), (1,0), (0,1), (2,0), (1,1), ...
    Polynomial networks and the Taylor recursion both rely on this exact order.
    """
    indices = [
        index for index in product(range(degree + 1), repeat=dim) if sum(index) <= degree
    ]
    return tuple(sorted(indices, key=lambda j: (sum(j), tuple(-v for v in j))))


@cache
def factorials(dim: int, degree: int) -> np.ndarray:
    """Return j! = Π_k j_k! for every multi-index in graded lexicographic order."""
    return np.array(
        [
            float(np.prod([math.factorial(v) for v in index]))
            for index in multi_indices(dim, degree)
        ]
    )


def monomials(offsets: np.ndarray, degree: int) -> np.ndarray:
    """Evaluate every monomial z^j with ‖j‖₁ ≤ degree at each row of `offsets`.

    Returns:
        Array of shape (n, number of multi-indices)
    """
    offsets = np.atleast_2d(offsets)
    exponents = np.array(multi_indices(offsets.shape[1], degree))
    return np.prod(offsets[:, None, :] ** exponents[None, :, :], axis=2)
