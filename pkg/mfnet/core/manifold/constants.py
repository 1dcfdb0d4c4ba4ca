import math

from mfnet.core.exceptions import ContractViolationError
from mfnet.core.manifold.models import Manifold, ManifoldConstants


def manifold_constants(manifold: Manifold) -> ManifoldConstants:
    """Return the cube-counting constants of a manifold.

    With r charts, d* the intrinsic dimension and C_{ψ,1}, C_{ψ,2} the extreme
    Lipschitz constants over all charts:

        c12 = r·(4·C_{ψ,2}·√d* + 4)^{d*}
        c13 = max{1/C_{ψ,1}^{d*}, 3^{d*}·r²·(2·C_{ψ,2}·√d* + 2)^{d*}}
    """
    if not manifold.charts:
        raise ContractViolationError("a manifold without charts has no constants")
    r = manifold.chart_count
    dim = manifold.intrinsic_dim
    lower, upper = manifold.lower_lipschitz, manifold.upper_lipschitz
    root = math.sqrt(dim)
    return ManifoldConstants(
        c12=r * (4.0 * upper * root + 4.0) ** dim,
        c13=max(
            1.0 / lower**dim,
            3.0**dim * r * r * (2.0 * upper * root + 2.0) ** dim,
        ),
        lower_lipschitz=lower,
        upper_lipschitz=upper,
    )


def slot_capacity(manifold: Manifold, M: int) -> int:
    """Return the recursion capacity ⌈c13·M^{d*}⌉."""
    return math.ceil(manifold_constants(manifold).c13 * M**manifold.intrinsic_dim)
