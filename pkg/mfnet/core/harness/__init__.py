from mfnet.core.harness.config import (
    load_experiment_config,
    parse_experiment_config,
)
from mfnet.core.harness.invariants import INVARIANTS, run_invariants
from mfnet.core.harness.models import (
    ExperimentConfig,
    ExperimentReport,
    InvariantResult,
    ReportRow,
    SlopeFit,
    SummaryRow,
    TrainingCurve,
)
from mfnet.core.harness.reporting import (
    render_summary_chart,
    write_csv,
    write_invariants,
    write_report,
)
from mfnet.core.harness.settings import ExperimentSettings
from mfnet.core.harness.slopes import fit_slope
from mfnet.core.harness.sweeps import (
    build_problem,
    run_approx_sweep,
    run_dim_study,
    run_rate_sweep,
    sub_seed,
    summarize,
)

__all__ = (
    "build_problem",
    "ExperimentConfig",
    "ExperimentReport",
    "ExperimentSettings",
    "fit_slope",
    "INVARIANTS",
    "InvariantResult",
    "load_experiment_config",
    "parse_experiment_config",
    "render_summary_chart",
    "ReportRow",
    "run_approx_sweep",
    "run_dim_study",
    "run_invariants",
    "run_rate_sweep",
    "SlopeFit",
    "sub_seed",
    "summarize",
    "SummaryRow",
    "TrainingCurve",
    "write_csv",
    "write_invariants",
    "write_report",
)
