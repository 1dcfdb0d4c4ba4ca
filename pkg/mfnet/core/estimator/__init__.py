from mfnet.core.estimator.architecture import arch_for
from mfnet.core.estimator.data import generate_regression_data
from mfnet.core.estimator.evaluation import empirical_L2, truncate
from mfnet.core.estimator.models import (
    Dataset,
    EstimatorConfig,
    TrainingRun,
    TruncatedPredictor,
)
from mfnet.core.estimator.training import (
    fit_least_squares,
    init_layers,
    loss_and_gradient,
    train,
)

__all__ = (
    "arch_for",
    "Dataset",
    "empirical_L2",
    "EstimatorConfig",
    "fit_least_squares",
    "generate_regression_data",
    "init_layers",
    "loss_and_gradient",
    "train",
    "TrainingRun",
    "truncate",
    "TruncatedPredictor",
)
