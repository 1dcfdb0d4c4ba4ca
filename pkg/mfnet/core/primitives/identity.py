import numpy as np

from mfnet.core.exceptions import ContractViolationError
from mfnet.core.relu_net import Network, pad_depth


def build_identity(dim: int) -> Network:
    """Return the one-layer network σ(x) − σ(−x) = x with 2·dim neurons."""
    if dim < 1:
        raise ContractViolationError("identity needs dim ≥ 1", dim)
    eye = np.eye(dim)
    return Network.from_layers(
        [
            (np.vstack([eye, -eye]), np.zeros(2 * dim)),
            (np.hstack([eye, -eye]), np.zeros(dim)),
        ]
    )


def build_identity_stack(dim: int, depth: int) -> Network:
    """Return the identity iterated `depth` times, the f_id^t of depth padding."""
    return pad_depth(build_identity(dim), depth)
