"""
Logging for the mean-payoff expression analyzer

All module loggers hang below one package logger. Console output goes to
standard error; standard output carries analysis results only.
"""

import logging
import logging.handlers
import os
import sys
from pathlib import Path
from typing import Optional

PACKAGE_LOGGER = "mpae"
DEFAULT_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def _level(name: Optional[str]) -> int:
    return getattr(logging, (name or os.getenv("MPAE_LOG_LEVEL", "WARNING")).upper())


def setup_logger(
    level: Optional[str] = None,
    log_file: Optional[str] = None,
    format_string: Optional[str] = None
) -> logging.Logger:
    """
    Configure the package logger with a stderr handler and an optional rotating file

    Args:
        level: Log level (DEBUG, INFO, WARNING, ERROR, CRITICAL); MPAE_LOG_LEVEL otherwise
        log_file: Path to log file; MPAE_LOG_FILE otherwise
        format_string: Custom format string

    Returns:
        The package logger
    """
    logger = logging.getLogger(PACKAGE_LOGGER)
    logger.handlers.clear()
    logger.propagate = False
    logger.setLevel(_level(level))

    formatter = logging.Formatter(format_string or DEFAULT_FORMAT, datefmt="%Y-%m-%d %H:%M:%S")

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setFormatter(formatter)
    logger.addHandler(console_handler)

    file_name = log_file or os.getenv("MPAE_LOG_FILE")
    if file_name:
        file_path = Path(file_name)
        file_path.parent.mkdir(parents=True, exist_ok=True)
        file_handler = logging.handlers.RotatingFileHandler(
            file_path,
            maxBytes=10 * 1024 * 1024,  # 10MB
            backupCount=5,
            encoding="utf-8"
        )
        file_handler.setFormatter(formatter)
        logger.addHandler(file_handler)

    return logger


def configure_level(level: str) -> None:
    """Change the level of the package logger and every module logger below it"""
    logging.getLogger(PACKAGE_LOGGER).setLevel(_level(level))


def setup_exception_logging() -> None:
    """Log uncaught exceptions through the package logger before the interpreter exits"""
    def handle_exception(exc_type, exc_value, exc_traceback):
        if issubclass(exc_type, KeyboardInterrupt):
            sys.__excepthook__(exc_type, exc_value, exc_traceback)
            return
        logging.getLogger(PACKAGE_LOGGER).critical(
            "Uncaught exception", exc_info=(exc_type, exc_value, exc_traceback)
        )

    sys.excepthook = handle_exception


_package_logger = setup_logger()


def get_logger(name: str) -> logging.Logger:
    """Module logger below the package logger, e.g. ``mpae.services.parser``"""
    if name.startswith("src."):
        name = name[len("src."):]
    return _package_logger.getChild(name)
