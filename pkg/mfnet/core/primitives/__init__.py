from mfnet.core.primitives.identity import build_identity, build_identity_stack
from mfnet.core.primitives.indicator import build_indicator, build_test
from mfnet.core.primitives.models import Box, ErrorContract, Primitive
from mfnet.core.primitives.mult import (
    build_mult,
    build_mult_d,
    mult_d_error_bound,
    mult_error_bound,
    mult_width,
)
from mfnet.core.primitives.poly import (
    build_poly,
    poly_factor_count,
    poly_precision_threshold,
)
from mfnet.core.primitives.preconditions import enforce

__all__ = (
    "Box",
    "build_identity",
    "build_identity_stack",
    "build_indicator",
    "build_mult",
    "build_mult_d",
    "build_poly",
    "build_test",
    "enforce",
    "ErrorContract",
    "mult_d_error_bound",
    "mult_error_bound",
    "mult_width",
    "poly_factor_count",
    "poly_precision_threshold",
    "Primitive",
)
