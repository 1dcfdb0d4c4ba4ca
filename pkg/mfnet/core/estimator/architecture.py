import math

from mfnet.core.exceptions import ContractViolationError


def arch_for(n: int, p: float, d_star: int, c3: float, c4: float) -> tuple[int, int]:
    """Return L_n = ⌈c3·ln n⌉ and r_n = ⌈c4·n^{d*/(2(2p + d*))}⌉."""
    if n < 2:
        raise ContractViolationError("architecture needs a sample of size n ≥ 2", n)
    exponent = d_star / (2.0 * (2.0 * p + d_star))
    return (
        max(1, math.ceil(c3 * math.log(n) - 1e-12)),
        max(1, math.ceil(c4 * n**exponent - 1e-12)),
    )
