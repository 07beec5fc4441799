"""
Logging setup for kirbycert.

Log records go to stderr through rich, so stdout carries only command output.
"""

import logging
from typing import Optional, Union

from rich.console import Console
from rich.logging import RichHandler

ROOT = "kirbycert"


def get_logger(name: str) -> logging.Logger:
    """Logger under the kirbycert namespace."""
    if name != ROOT and not name.startswith(ROOT + "."):
        name = f"{ROOT}.{name}"
    return logging.getLogger(name)


def configure_logging(level: Union[int, str] = "WARNING", console: Optional[Console] = None) -> logging.Logger:
    """Install a single rich handler on the package logger."""
    logger = logging.getLogger(ROOT)
    if isinstance(level, str):
        level = logging.getLevelName(level.upper())
        if not isinstance(level, int):
            level = logging.WARNING
    logger.setLevel(level)

    for handler in list(logger.handlers):
        if isinstance(handler, RichHandler):
            logger.removeHandler(handler)
    handler = RichHandler(
        console=console or Console(stderr=True),
        show_path=False,
        rich_tracebacks=True,
    )
    handler.setFormatter(logging.Formatter("%(message)s"))
    logger.addHandler(handler)
    logger.propagate = False
    return logger
