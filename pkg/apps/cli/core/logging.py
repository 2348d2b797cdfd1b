"""Logging configuration."""

import logging
import sys

from pythonjsonlogger import jsonlogger

from apps.cli.core.config import settings


def setup_logging(verbose: bool = False) -> None:
    """Configure logging on stderr; stdout carries reports only."""
    log_level = logging.DEBUG if settings.DEBUG or verbose else logging.WARNING

    root_logger = logging.getLogger()
    root_logger.setLevel(log_level)
    for handler in list(root_logger.handlers):
        if getattr(handler, "_rootmonoid", False):
            root_logger.removeHandler(handler)

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(log_level)
    console_handler._rootmonoid = True  # type: ignore[attr-defined]

    if settings.LOG_FORMAT == "json":
        formatter: logging.Formatter = jsonlogger.JsonFormatter(
            "%(levelname)s %(name)s %(message)s",
            rename_fields={"levelname": "level"},
        )
    else:
        formatter = logging.Formatter("%(levelname)s %(name)s: %(message)s")

    console_handler.setFormatter(formatter)
    root_logger.addHandler(console_handler)
