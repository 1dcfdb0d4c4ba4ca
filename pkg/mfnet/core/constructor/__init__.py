from mfnet.core.constructor.bounds import (
    band_scale,
    formula_depth_fhat,
    formula_depth_fhat_check,
    formula_depth_fhat_P2,
    formula_depth_fhat_P2_true,
    formula_depth_fhat_w,
    formula_width_fhat,
    formula_width_fhat_check,
    formula_width_fhat_net,
    formula_width_fhat_P2,
    formula_width_fhat_P2_true,
    formula_width_fhat_w,
    gate_bound,
    precision_layers,
    synchronized_depth,
)
from mfnet.core.constructor.builders import (
    build_fhat,
    build_fhat_check,
    build_fhat_net,
    build_fhat_P2,
    build_fhat_P2_true,
    build_fhat_w,
    recursion_poly,
)
from mfnet.core.constructor.front import build_check_network, build_recursion_front
from mfnet.core.constructor.models import ConstructionReport, dump_report
from mfnet.core.constructor.weights import (
    face_distance,
    fine_offsets,
    weight_w,
    weight_w_many,
)

__all__ = (
    "band_scale",
    "build_check_network",
    "build_fhat",
    "build_fhat_check",
    "build_fhat_net",
    "build_fhat_P2",
    "build_fhat_P2_true",
    "build_fhat_w",
    "build_recursion_front",
    "ConstructionReport",
    "dump_report",
    "face_distance",
    "fine_offsets",
    "formula_depth_fhat",
    "formula_depth_fhat_check",
    "formula_depth_fhat_P2",
    "formula_depth_fhat_P2_true",
    "formula_depth_fhat_w",
    "formula_width_fhat",
    "formula_width_fhat_check",
    "formula_width_fhat_net",
    "formula_width_fhat_P2",
    "formula_width_fhat_P2_true",
    "formula_width_fhat_w",
    "gate_bound",
    "precision_layers",
    "recursion_poly",
    "synchronized_depth",
    "weight_w",
    "weight_w_many",
)
