from pathlib import Path
from typing import Self, cast

from pydantic import Field, model_validator
from pydantic_settings import BaseSettings as PydanticBaseSettings
from pydantic_settings import SettingsConfigDict
from pydantic_settings.sources import EnvSettingsSource

from mfnet.core.context import SingletonStore
from mfnet.core.types import AnchoredPath, PreconditionPolicy

SETTINGS_STORE = SingletonStore["BaseSettings"]()


class BaseSettings(PydanticBaseSettings):
    """Common settings definition class.

    Settings are accessed through a singleton instance of a pydantic settings class,
    loaded lazily by calling `BaseSettings.get()`. Commands with extra options
    declare a subclass and call `SubclassSettings.get()`.

    Defaults are chosen for desk-scale runs and unit tests: small guards, relaxed
    asymptotic preconditions and a single worker.
    """

    model_config = SettingsConfigDict(
        populate_by_name=True,
        env_prefix="mfnet_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
        validate_default=True,
        validate_assignment=True,
    )

    @classmethod
    def get(cls: type[Self]) -> Self:
        """Get the current settings instance from the singleton store."""
        return cast(Self, SETTINGS_STORE.load(cls))

    # Note: Environment variable names of base fields are hardcoded, otherwise
    # subclasses with another prefix would rename them.

    debug: bool = Field(
        False,
        alias="pdb",
        description="Jump into post-mortem debugging after any uncaught exception.",
        validation_alias="MFNET_DEBUG",
    )
    assets_dir: Path = Field(
        Path.cwd() / "assets",
        description=(
            "Directory with read-only inputs such as experiment config files, "
            "defaults to a folder named `assets` in the current directory."
        ),
        validation_alias="MFNET_ASSETS_DIR",
    )
    work_dir: Path = Field(
        Path.cwd(),
        alias="out",
        description=(
            "Directory that receives reports, networks and plots. "
            "Defaults to the current working directory."
        ),
        validation_alias="MFNET_WORK_DIR",
    )
    seed: int = Field(
        0,
        description="Master seed from which every sub-run derives its random stream.",
        validation_alias="MFNET_SEED",
    )
    jobs: int = Field(
        1,
        ge=1,
        description="Number of worker processes for sweeps and shifted-grid builds.",
        validation_alias="MFNET_JOBS",
    )
    precondition_policy: PreconditionPolicy = Field(
        PreconditionPolicy.WARN,
        description=(
            "Whether construction builders raise or only warn when M lies below "
            "the asymptotic thresholds of the error bounds."
        ),
        validation_alias="MFNET_PRECONDITION_POLICY",
    )
    exact_tolerance: float = Field(
        1e-9,
        gt=0,
        description="Absolute tolerance for claims of exact equality.",
        validation_alias="MFNET_EXACT_TOLERANCE",
    )
    raster_oversampling: int = Field(
        4,
        ge=1,
        description="Refinement factor of the chart rasterization grid.",
        validation_alias="MFNET_RASTER_OVERSAMPLING",
    )
    eval_chunk_size: int = Field(
        2048,
        ge=1,
        description="Number of points pushed through a network at once.",
        validation_alias="MFNET_EVAL_CHUNK_SIZE",
    )
    max_ambient_dim: int = Field(
        12,
        ge=1,
        description="Largest ambient dimension accepted for shifted-grid builds.",
        validation_alias="MFNET_MAX_AMBIENT_DIM",
    )
    max_grid_size: int = Field(
        16,
        ge=2,
        description="Largest grid parameter M accepted by the harness.",
        validation_alias="MFNET_MAX_GRID_SIZE",
    )
    max_sample_size: int = Field(
        20000,
        ge=1,
        description="Largest training sample size accepted by the harness.",
        validation_alias="MFNET_MAX_SAMPLE_SIZE",
    )
    write_svg: bool = Field(
        True,
        description="Render a log-log SVG chart next to every summary CSV.",
        validation_alias="MFNET_WRITE_SVG",
    )

    def text(self) -> str:
        """Dump the current settings into a readable table."""
        dict_ = self.model_dump()
        indent = max(len(key) for key in dict_)
        return "\n".join(
            [
                f"{key.ljust(indent)} "
                f"{', '.join(str(v) for v in val) if isinstance(val, list) else val}"
                for key, val in dict_.items()
            ]
        )

    @classmethod
    def get_env_name(cls, name: str) -> str:
        """Get the name of the environment variable for field with given name."""
        field = cls.model_fields[name]
        env_settings = EnvSettingsSource(
            cls,
            case_sensitive=cls.model_config.get("case_sensitive", False),
            env_prefix=cls.model_config.get("env_prefix", ""),
        )
        env_info = env_settings._extract_field_info(field, name)
        return env_info[0][1].upper()

    @model_validator(mode="after")
    def resolve_paths(self) -> Self:
        """Anchor relative `AssetsPath` and `WorkPath` fields to their directories."""
        for name in self.model_fields:
            value = getattr(self, name)
            if isinstance(value, AnchoredPath) and value.is_relative():
                directory = getattr(self, value.anchor_field)
                # bypass validate_assignment to avoid re-running this validator
                self.__dict__[name] = value.anchored(directory)
        return self

    @model_validator(mode="after")
    def sync_settings(self) -> Self:
        """Propagate changes of base fields to all other active settings classes.

        Other classes pick up the change the next time their `.get()` is called.
        """
        SETTINGS_STORE.push(self)
        base_scope = {
            field: value
            for field, value in self.model_dump(exclude_unset=True).items()
            if field in BaseSettings.model_fields
        }
        for settings in SETTINGS_STORE:
            SETTINGS_STORE.push(
                settings.model_construct(**{**settings.model_dump(), **base_scope})
            )
        return cast(Self, SETTINGS_STORE.load(type(self)))
