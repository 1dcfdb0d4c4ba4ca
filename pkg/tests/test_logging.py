import logging
from datetime import datetime
from typing import Any

from pytest import LogCaptureFixture

from mfnet.core.exceptions import MFNetError
from mfnet.core.logging import echo, get_ts, warn, watch


def test_watch(caplog: LogCaptureFixture) -> None:
    items = ["foo", 4.5, MFNetError("foo", 42)]

    @watch
    def dummy_generator() -> Any:
        yield from items

    # unpack generator and capture logs
    with caplog.at_level(logging.INFO, logger="mfnet"):
        yielded_items = list(dummy_generator())

    # check that returned items are untouched
    assert yielded_items == items

    # check captured logging
    assert len(caplog.messages) == 3
    str_line, float_line, error_line = caplog.messages
    assert "[dummy generator] foo" in str_line
    assert "[dummy generator] 4.5" in float_line
    assert "[dummy generator] MFNetError: foo, 42" in error_line


def test_get_ts() -> None:
    assert get_ts(datetime(1999, 12, 31, 23, 59, 59)) == (
        "\x1b[93m[1999-12-31 23:59:59]\x1b[0m"
    )


def test_echo(caplog: LogCaptureFixture) -> None:
    # echo while capturing logs
    with caplog.at_level(logging.INFO, logger="mfnet"):
        echo("This is going well", ts=datetime(1999, 12, 31, 23, 59, 59))

    assert "[1999-12-31 23:59:59] This is going well" in caplog.text


def test_warn(caplog: LogCaptureFixture) -> None:
    with caplog.at_level(logging.INFO, logger="mfnet"):
        warn("M is below the threshold")

    (record,) = caplog.records
    assert record.levelno == logging.WARNING
    assert "M is below the threshold" in record.getMessage()
