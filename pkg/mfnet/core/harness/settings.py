from pydantic import Field

from mfnet.core.settings import BaseSettings
from mfnet.core.types import AssetsPath


class ExperimentSettings(BaseSettings):
    """Settings of the experiment commands."""

    config: AssetsPath | None = Field(
        None,
        description=(
            "Experiment config file, absolute or relative to `assets_dir`; "
            "required by the sweep commands."
        ),
        validation_alias="MFNET_CONFIG",
    )
