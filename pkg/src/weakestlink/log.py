#!/usr/bin/env python
"""weakestlink logging setup: stderr always, plus optional log files.

Attributes:
    log (logging.Logger): the log object for this module.

"""
import logging
import logging.handlers
import os
import threading
from contextlib import contextmanager
from typing import Any, Generator, Mapping, Optional

from weakestlink.utils import makedirs

log = logging.getLogger(__name__)


def _formatter(config: Mapping[str, Any]) -> logging.Formatter:
    return logging.Formatter(fmt=config["log_fmt"], datefmt=config["log_datefmt"])


def _file_handler(config: Mapping[str, Any], path: str) -> logging.Handler:
    """Pick the file handler the settings ask for.

    ``watch_log_file`` wins, for logrotate setups.
    Otherwise rotate when both ``log_max_bytes`` and ``log_max_backups`` are
    set, else append to a plain file.

    """
    if config["watch_log_file"]:
        return logging.handlers.WatchedFileHandler(path)
    if config["log_max_bytes"] and config["log_max_backups"]:
        return logging.handlers.RotatingFileHandler(filename=path, maxBytes=config["log_max_bytes"], backupCount=config["log_max_backups"])
    return logging.FileHandler(path)


def update_logging_config(config: Mapping[str, Any], log_name: Optional[str] = None, file_name: str = "weakestlink.log") -> None:
    """Point the ``weakestlink`` logger (or ``log_name``) at stderr and ``log_dir``.

    The level is DEBUG with ``verbose`` and INFO otherwise.  Repeated calls
    don't duplicate the stderr, log-file or null handlers.

    Args:
        config (dict): the running settings.
        log_name (str, optional): the logger to configure. Defaults to the
            top-level package logger.
        file_name (str, optional): the log file name inside ``log_dir``.

    """
    logger = logging.getLogger(log_name or __name__.split(".")[0])
    formatter = _formatter(config)
    logger.setLevel(logging.DEBUG if config.get("verbose") else logging.INFO)

    has_stderr = any(isinstance(h, logging.StreamHandler) and not isinstance(h, logging.FileHandler) for h in logger.handlers)
    if not has_stderr:
        stderr_handler = logging.StreamHandler()
        stderr_handler.setFormatter(formatter)
        logger.addHandler(stderr_handler)

    if config.get("log_dir"):
        path = os.path.abspath(os.path.join(config["log_dir"], file_name))
        if not any(isinstance(h, logging.FileHandler) and h.baseFilename == path for h in logger.handlers):
            makedirs(config["log_dir"])
            file_handler = _file_handler(config, path)
            file_handler.setFormatter(formatter)
            logger.addHandler(file_handler)
    if not any(isinstance(h, logging.NullHandler) for h in logger.handlers):
        logger.addHandler(logging.NullHandler())


@contextmanager
def contextual_log_handler(
    config: Mapping[str, Any],
    path: str,
    log_obj: Optional[logging.Logger] = None,
    level: int = logging.DEBUG,
    formatter: Optional[logging.Formatter] = None,
    thread_only: bool = False,
) -> Generator[None, None, None]:
    """Copy log output into ``path`` for the duration of one audit.

    Args:
        config (dict): the running settings.
        path (str): the log file to create; parent dirs are made.
        log_obj (logging.Logger, optional): defaults to the top-level package logger.
        level (int, optional): defaults to logging.DEBUG.
        formatter (logging.Formatter, optional): defaults to the settings' format.
        thread_only (bool, optional): drop records from other threads, so
            concurrent audits each get their own file. Defaults to False.

    """
    log_obj = log_obj or logging.getLogger(__name__.split(".")[0])
    makedirs(os.path.dirname(path))
    handler = logging.FileHandler(path, encoding="utf-8")
    handler.setLevel(level)
    handler.setFormatter(formatter or _formatter(config))
    if thread_only:
        ident = threading.get_ident()
        handler.addFilter(lambda record: record.thread == ident)
    log_obj.addHandler(handler)
    try:
        yield
    finally:
        handler.close()
        log_obj.removeHandler(handler)
