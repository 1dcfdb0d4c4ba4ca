import json
import pdb  # noqa: T100
import sys
from bdb import BdbQuit
from collections.abc import Callable
from datetime import datetime
from functools import partial
from textwrap import dedent
from traceback import format_exc
from typing import Any

import click
from click import Command, Option
from click.core import ParameterSource
from click.exceptions import Abort, Exit
from pydantic.fields import FieldInfo

from mfnet.core.logging import echo, logger
from mfnet.core.settings import SETTINGS_STORE, BaseSettings
from mfnet.core.transform import MFNetEncoder

HELP_TEMPLATE = """
{doc}

Options are read from these sources, highest priority first:
(1) command line options
(2) environment variables prefixed with {env_prefix}
(3) dotenv file located at {env_file}
(4) defaults of the settings model
"""

# click handles these natively, everything else is passed as text for pydantic
_NATIVE_TYPES = (int, bool, float)


def _field_to_parameters(name: str, field: FieldInfo) -> list[str]:
    """Build option declarations from a settings field name and its alias.

    Underscores become dashes; one-letter names get a single dash.
    """
    names = [name] + ([field.alias] if field.alias else [])
    return [
        f"{'--' if len(n) > 1 else '-'}{n.replace('_', '-')}" for n in names
    ]


def _field_default(field: FieldInfo) -> Any:
    """Render the default of a field the way click should display and pass it."""
    if field.is_required():
        return None
    if field.annotation in _NATIVE_TYPES:
        return field.default
    return json.dumps(field.default, cls=MFNetEncoder).strip('"')


def _field_to_option(name: str, settings_cls: type[BaseSettings]) -> Option:
    """Convert a field of a settings class into a click option.

    Args:
        name: Name of the field
        settings_cls: Base settings class or a subclass of it

    Returns:
        Click option carrying the field's env var, description and default
    """
    field = settings_cls.model_fields[name]
    native = field.annotation in _NATIVE_TYPES
    return Option(
        _field_to_parameters(name, field),
        default=_field_default(field),
        envvar=settings_cls.get_env_name(name),
        help=field.description,
        is_flag=field.annotation is bool and field.default is False,
        show_default=True,
        show_envvar=True,
        type=field.annotation if native else str,
        required=field.is_required(),
    )


def _callback(
    func: Callable[[], None],
    settings_cls: type[BaseSettings],
    **cli_settings: Any,
) -> None:
    """Load settings from the command line, run `func` and exit with its status.

    Args:
        func: Entry point function for a cli
        settings_cls: Base settings class or a subclass of it
        cli_settings: Parsed option values

    Raises:
        Exception: Any uncaught exception when in debug mode
        SysExit: With exit code 0 or 1
    """
    context = click.get_current_context()
    context.call_on_close(SETTINGS_STORE.reset)

    # only explicit command line values override env vars and dotenv files
    settings = settings_cls.model_validate(
        {
            key: value
            for key, value in cli_settings.items()
            if context.get_parameter_source(key) == ParameterSource.COMMANDLINE
        }
    )
    SETTINGS_STORE.push(settings)

    logger.info(click.style(dedent(f"    {func.__doc__}"), fg="green"))
    logger.info(click.style(f"{settings.text()}\n", fg="bright_cyan"))

    started = datetime.now()
    try:
        func()
    except (Abort, BdbQuit, Exit, KeyboardInterrupt):  # pragma: no cover
        context.exit(130)
    except Exception as error:
        logger.error(click.style(format_exc(), fg="red"))
        if settings.debug:  # pragma: no cover
            pdb.post_mortem(sys.exc_info()[2])
            raise error
        echo("exit", fg="red")
        context.exit(1)

    echo(f"done after {datetime.now() - started}", fg="green")
    context.exit(0)


def entrypoint(
    settings_cls: type[BaseSettings],
) -> Callable[[Callable[[], None]], Command]:
    """Turn a parameterless function into a click command configured by settings.

    Every field of `settings_cls` becomes an option. On startup the command logs its
    docstring and the effective settings; uncaught errors are logged and mapped to
    exit code 1, or open a post-mortem debugger when `debug` is set.

    Args:
        settings_cls: Settings class that should be instantiated globally.

    Returns:
        Decorator producing a click command
    """

    def decorator(func: Callable[[], None]) -> Command:
        return Command(
            func.__name__,
            help=HELP_TEMPLATE.format(
                doc=func.__doc__,
                env_prefix=str(settings_cls.model_config.get("env_prefix")).upper(),
                env_file=settings_cls.model_config.get("env_file"),
            ),
            callback=partial(_callback, func, settings_cls),
            params=[
                _field_to_option(name, settings_cls)
                for name in settings_cls.model_fields
            ],
        )

    return decorator
