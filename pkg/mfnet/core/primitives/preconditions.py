from mfnet.core.exceptions import PreconditionError
from mfnet.core.logging import warn
from mfnet.core.types import PreconditionPolicy


def enforce(
    satisfied: bool,
    message: str,
    required_minimum: float,
    policy: PreconditionPolicy,
    error_cls: type[PreconditionError] = PreconditionError,
) -> bool:
    """Apply `policy` to a lower-bound precondition and return whether it holds.

    Raises:
        PreconditionError: When the precondition fails under `RAISE`
    """
    if satisfied:
        return True
    if policy is PreconditionPolicy.RAISE:
        raise error_cls(message, required_minimum)
    warn(f"{message} (required minimum {required_minimum:g})")
    return False
