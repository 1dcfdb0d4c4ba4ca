import json
from collections.abc import Generator, Iterable
from contextlib import ExitStack
from pathlib import Path
from typing import IO, Any

from mfnet.core.logging import echo, watch
from mfnet.core.models import BaseModel
from mfnet.core.settings import BaseSettings
from mfnet.core.transform import MFNetEncoder


@watch
def write_ndjson(
    models: Iterable[BaseModel],
    directory: Path | None = None,
) -> Generator[str, None, None]:
    """Append the incoming models to one new-line delimited JSON file per class.

    Args:
        models: Iterable of models to write
        directory: Target directory, defaults to `work_dir`

    Settings:
        work_dir: Path to store the NDJSON files in

    Returns:
        Generator for checksums of written models
    """
    file_handles: dict[str, IO[Any]] = {}
    directory = directory or BaseSettings.get().work_dir
    with ExitStack() as stack:
        for model in models:
            class_name = model.__class__.__name__
            try:
                handle = file_handles[class_name]
            except KeyError:
                file_name = Path(directory, f"{class_name}.ndjson")
                writer = open(file_name, "a+", encoding="utf-8")
                file_handles[class_name] = handle = stack.enter_context(writer)
                echo(
                    f"[writing {class_name} to file] {file_name.as_posix()}",
                    fg="green",
                )

            json.dump(model, handle, sort_keys=True, cls=MFNetEncoder)
            handle.write("\n")
            yield model.checksum()
