import math
from collections.abc import Iterator

import numpy as np


def ceil_log(value: float, base: float) -> int:
    """Return ⌈log_base(value)⌉, robust against rounding at exact powers."""
    exact = math.log(value) / math.log(base)
    nearest = round(exact)
    if abs(exact - nearest) < 1e-12:
        return int(nearest)
    return math.ceil(exact)


def ceil_log2(value: int) -> int:
    """Return ⌈log₂(value)⌉ for a positive integer."""
    return (value - 1).bit_length()


def chunked_rows(array: np.ndarray, chunk_size: int) -> Iterator[np.ndarray]:
    """Yield consecutive row blocks of at most `chunk_size` rows."""
    for start in range(0, array.shape[0], chunk_size):
        yield array[start : start + chunk_size]
