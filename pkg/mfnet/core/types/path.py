from os import PathLike
from pathlib import Path
from typing import Any, Self

from pydantic import GetCoreSchemaHandler
from pydantic_core import core_schema


class AnchoredPath(PathLike[str]):
    """Path that is either absolute or relative to a directory named in the settings.

    Subclasses name the settings field they are anchored to; the settings resolve
    relative instances against that directory after validation.
    """

    anchor_field: str = ""

    def __init__(self, path: "str | Path | AnchoredPath") -> None:
        """Wrap the given path."""
        self._path = path._path if isinstance(path, AnchoredPath) else Path(path)

    def __fspath__(self) -> str:
        """Return the file system path representation."""
        return self._path.__fspath__()

    def __truediv__(self, other: str | PathLike[str]) -> Path:
        """Join with another path segment."""
        return self._path / other

    def __str__(self) -> str:
        """Render the path with forward slashes."""
        return self._path.as_posix()

    def __repr__(self) -> str:
        """Render the class name and path."""
        return f'{self.__class__.__name__}("{self}")'

    def __eq__(self, other: object) -> bool:
        """Compare the wrapped paths of two anchored paths."""
        if isinstance(other, AnchoredPath):
            return self._path == other._path
        return NotImplemented

    def __hash__(self) -> int:
        """Hash the wrapped path."""
        return hash(self._path)

    @property
    def path(self) -> Path:
        """Return the wrapped path."""
        return self._path

    def is_relative(self) -> bool:
        """Return True if the wrapped path still needs anchoring."""
        return not self._path.is_absolute()

    def anchored(self, directory: Path) -> Self:
        """Return a copy resolved against `directory` if the path is relative."""
        if self.is_relative():
            return type(self)(directory.resolve() / self._path)
        return self

    @classmethod
    def validate(cls, value: Any) -> Self:
        """Parse strings, paths and anchored paths."""
        if isinstance(value, str | Path | AnchoredPath):
            return cls(value)
        raise ValueError(f"Cannot parse {type(value)} as {cls.__name__}")

    @classmethod
    def __get_pydantic_core_schema__(
        cls, _source: type[Any], _handler: GetCoreSchemaHandler
    ) -> core_schema.CoreSchema:
        """Validate from strings in JSON mode and from path-likes in python mode."""
        return core_schema.json_or_python_schema(
            json_schema=core_schema.chain_schema(
                [
                    core_schema.str_schema(),
                    core_schema.no_info_plain_validator_function(cls.validate),
                ]
            ),
            python_schema=core_schema.no_info_plain_validator_function(cls.validate),
            serialization=core_schema.plain_serializer_function_ser_schema(
                str, when_used="json"
            ),
        )


class AssetsPath(AnchoredPath):
    """Path that is absolute or relative to `assets_dir`."""

    anchor_field = "assets_dir"


class WorkPath(AnchoredPath):
    """Path that is absolute or relative to `work_dir`."""

    anchor_field = "work_dir"
