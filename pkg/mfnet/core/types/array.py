from typing import Annotated, Any

import numpy as np
from pydantic import PlainSerializer, PlainValidator


def as_frozen_array(value: Any) -> np.ndarray:
    """Copy `value` into a read-only float64 array."""
    array = np.array(value, dtype=np.float64)
    array.setflags(write=False)
    return array


FrozenArray = Annotated[
    np.ndarray,
    PlainValidator(as_frozen_array),
    PlainSerializer(
        lambda array: array.tolist(), return_type=list, when_used="json"
    ),
]
