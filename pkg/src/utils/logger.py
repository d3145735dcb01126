"""
Logging configuration and utilities
Records from path tracking carry path_id, log-time s and step size as extra fields.
"""

import sys
from typing import Optional

from loguru import logger as _log

from src.config import settings

PATH_FIELDS = ("path_id", "s", "step")

_CONSOLE_HEAD = "<green>{time:YYYY-MM-DD HH:mm:ss}</green> | <level>{level: <8}</level> | <cyan>{extra[module]}</cyan>"
_FILE_HEAD = "{time:YYYY-MM-DD HH:mm:ss} | {level: <8} | {extra[module]}:{function}:{line}"


def _path_context(extra: dict) -> str:
    """'path=3 s=-1.2e-05 step=4.0e-06' for records bound to a path, else ''"""
    if extra.get("path_id") is None:
        return ""
    parts = [f"path={extra['path_id']}"]
    if extra.get("s") is not None:
        parts.append(f"s={extra['s']:.3e}")
    if extra.get("step") is not None:
        parts.append(f"step={extra['step']:.1e}")
    return " [" + " ".join(parts) + "]"


def _formatter(head: str):
    def _format(record) -> str:
        # braces in the context are escaped so loguru does not treat them as fields
        context = _path_context(record["extra"]).replace("{", "{{").replace("}", "}}")
        return head + context + " - <level>{message}</level>\n{exception}"

    return _format


def _plain_formatter(head: str):
    def _format(record) -> str:
        context = _path_context(record["extra"]).replace("{", "{{").replace("}", "}}")
        return head + context + " - {message}\n{exception}"

    return _format


def setup_logger(name: str = "teneig"):
    """
    Setup application logger with Loguru

    Args:
        name: Log file stem and default module field

    Returns:
        Configured logger instance
    """

    # Remove default handler
    _log.remove()
    _log.configure(extra={"module": name, "path_id": None, "s": None, "step": None})

    # Console handler on stderr; stdout carries result documents
    _log.add(
        sys.stderr,
        format=_formatter(_CONSOLE_HEAD),
        level=settings.console_level(),
        colorize=True,
    )

    if settings.log_folder_path is not None:
        # Path-level DEBUG records end up here
        _log.add(
            settings.log_folder_path / f"{name}.log",
            format=_plain_formatter(_FILE_HEAD),
            level="DEBUG",
            rotation="10 MB",
            retention="7 days",
            compression="zip",
        )
        _log.add(
            settings.log_folder_path / f"{name}_error.log",
            format=_plain_formatter(_FILE_HEAD),
            level="ERROR",
            rotation="10 MB",
            retention="30 days",
            compression="zip",
        )

    return _log.bind(module=name)


# Create default logger
default_logger = setup_logger()


def get_logger(name: str):
    """Get logger for specific module"""
    return _log.bind(module=name)


def path_logger(name: str, path_id: int, s: Optional[float] = None, step: Optional[float] = None):
    """Logger for one tracked path; s and step are the log-time and step size at the event"""
    return _log.bind(module=name, path_id=path_id, s=s, step=step)
