"""
src/utils/logger.py
Structured logger: Rich console on stderr + optional rotating file output.
"""
from __future__ import annotations

import logging
import os
from logging.handlers import RotatingFileHandler

from rich.console import Console
from rich.logging import RichHandler

from src.utils.config import get_config

_loggers: dict[str, logging.Logger] = {}
_level_override: str | None = None

# stdout carries JSON/CSV only
_console = Console(stderr=True)


def _configured_level() -> int:
    level = _level_override or get_config("settings").get("log_level", "INFO")
    return getattr(logging, str(level).upper(), logging.INFO)


def get_logger(name: str = "barrlund") -> logging.Logger:
    if name in _loggers:
        return _loggers[name]

    logger = logging.getLogger(name)
    logger.setLevel(_configured_level())
    logger.propagate = False

    if not logger.handlers:
        console = RichHandler(console=_console, rich_tracebacks=True, show_path=False)
        console.setLevel(logging.DEBUG)
        logger.addHandler(console)

        log_dir = get_config("settings").get("log_dir")
        if log_dir:
            os.makedirs(log_dir, exist_ok=True)
            file_handler = RotatingFileHandler(
                os.path.join(log_dir, f"{name}.log"),
                maxBytes=10 * 1024 * 1024,  # 10 MB
                backupCount=5,
                encoding="utf-8",
            )
            file_handler.setLevel(logging.DEBUG)
            file_handler.setFormatter(
                logging.Formatter("%(asctime)s | %(levelname)-8s | %(name)s | %(message)s")
            )
            logger.addHandler(file_handler)

    _loggers[name] = logger
    return logger


def set_level(level: str) -> None:
    """Override the configured level for existing and future loggers."""
    global _level_override
    _level_override = level.upper()
    numeric = _configured_level()
    for logger in _loggers.values():
        logger.setLevel(numeric)
