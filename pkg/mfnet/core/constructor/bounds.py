"""Closed-form depths, widths, constants and error bounds of the constructions."""

import math

from mfnet.core.primitives import mult_d_error_bound, mult_width
from mfnet.core.utils import ceil_log, ceil_log2

# teeth formed by the first layer of the weight and final products
PRODUCT_HEAD = 4


def band_scale(M: int, p: float) -> float:
    """Return B_M = M^{2p+2}, the inverse width of the boundary bands."""
    return float(M) ** (2 * p + 2)


def precision_layers(M: int, p: float) -> int:
    """Return B_{M,p} = ⌈log₄(M^{2p})⌉, the depth of every multiplication network."""
    return max(1, ceil_log(float(M) ** (2 * p), 4.0))


def poly_degree(q: int) -> int:
    """Degree of the polynomial network; degree 0 is realized by degree 1."""
    return max(q, 1)


def monomial_count(d: int, q: int) -> int:
    """Return binom(d + q, d)."""
    return math.comb(d + q, d)


def value_bound(a: float, cq_norm: float) -> float:
    """Return max{3a, ‖f‖_{C^q}}, the input bound of the polynomial network."""
    return max(3.0 * a, cq_norm, 1.0)


def gate_bound(a: float, d: int, cq_norm: float) -> float:
    """Return B_true = 2·e^{4ad}·max{‖f‖_{C^q}, 1}."""
    return 2.0 * math.exp(4.0 * a * d) * max(cq_norm, 1.0)


def formula_depth_fhat_P2(M: int, p: float, q: int) -> int:
    """Return 4 + B_{M,p}·⌈log₂ max{q+1, 2}⌉."""
    return 4 + precision_layers(M, p) * ceil_log2(max(q + 1, 2))


def formula_width_fhat_P2(d: int, q: int, capacity: int) -> int:
    """Return max{(binom(d+q,d) + d)·cap·2·(2d+2) + 2d, 18·(q+1)·binom(d+q,d)}."""
    count = monomial_count(d, q)
    return max((count + d) * capacity * 2 * (2 * d + 2) + 2 * d, 18 * (q + 1) * count)


def formula_depth_fhat_w(M: int, p: float, d: int) -> int:
    """Return 5 + B_{M,p}·⌈log₂ d⌉."""
    return 5 + precision_layers(M, p) * ceil_log2(d)


def formula_width_fhat_w(d: int, capacity: int) -> int:
    """Return max{d·r_mult, 2d + d·cap·2·(2d+2), 3d} for product width r_mult."""
    return max(
        d * mult_width(PRODUCT_HEAD), 2 * d + d * capacity * 2 * (2 * d + 2), 3 * d
    )


def formula_depth_fhat_check() -> int:
    """The check network always has five hidden layers."""
    return 5


def formula_width_fhat_check(d: int, capacity: int) -> int:
    """Return 2d + (4d² + 4d)·cap."""
    return 2 * d + (4 * d * d + 4 * d) * capacity


def formula_depth_fhat_P2_true(M: int, p: float, q: int) -> int:
    """Return 5 + B_{M,p}·⌈log₂ max{q+1, 2}⌉."""
    return formula_depth_fhat_P2(M, p, q) + 1


def formula_width_fhat_P2_true(d: int, q: int, capacity: int) -> int:
    """Recursion and check networks side by side."""
    return formula_width_fhat_P2(d, q, capacity) + formula_width_fhat_check(
        d, capacity
    )


def synchronized_depth(M: int, p: float, q: int, d: int) -> int:
    """Return 5 + B_{M,p}·⌈log₂(max{q, d} + 1)⌉, the depth before the final product."""
    return 5 + precision_layers(M, p) * ceil_log2(max(q, d) + 1)


def formula_depth_fhat(M: int, p: float, q: int, d: int) -> int:
    """Return 5 + B_{M,p}·(⌈log₂(max{q, d} + 1)⌉ + 1)."""
    return synchronized_depth(M, p, q, d) + precision_layers(M, p)


def formula_width_fhat(d: int, q: int, capacity: int) -> int:
    """Return 64·binom(d+q,d)·d²·(q+1)·cap, at least the final product width."""
    return max(
        64 * monomial_count(d, q) * d * d * (q + 1) * capacity,
        mult_width(PRODUCT_HEAD),
    )


def formula_width_fhat_net(d: int, q: int, capacity: int) -> int:
    """Return 2^d·64·binom(d+q,d)·d²·(q+1)·cap."""
    return 2**d * formula_width_fhat(d, q, capacity)


def taylor_error_bound(M: int, p: float, a: float, d: int, holder: float) -> float:
    """Return (2ad)^{2p}·C·M^{−2p}, the piecewise Taylor bound with c10 = 1."""
    return (2.0 * a * d) ** (2 * p) * holder * float(M) ** (-2 * p)


def weight_error_bound(M: int, p: float, d: int) -> float:
    """Return 4^{4d+1}·d·4^{1−B_{M,p}−head} for d ≥ 2; exact hats need none."""
    if d == 1:
        return float(2.0**-52)
    return mult_d_error_bound(d, precision_layers(M, p), 1.0, PRODUCT_HEAD)


def band_weight_bound(M: int, p: float) -> float:
    """Bound 4·M^{−2p} on the weight within 2/B_M of a fine-cube face."""
    return 4.0 * float(M) ** (-2 * p)
