"""Unified logging configuration for the boolfix command-line tool.

All diagnostics go to stderr so that stdout stays reserved for results and
JSON documents.

Usage:
    At CLI startup (the typer callback does this):
    >>> from boolfix.logging_config import configure_logging
    >>> configure_logging()

Configuration:
    - Log level: Set via BOOLFIX_LOG_LEVEL environment variable (default: WARNING)
    - Verbose: BOOLFIX_VERBOSE_LOGGING=true drops the boolfix logger to DEBUG
    - Format: "%(asctime)s %(levelname)-5s [%(name)s] %(message)s"
    - Date format: "%Y-%m-%d %H:%M:%S"
"""

import logging
import logging.config
import os
from typing import Any, Dict, Optional

from .constants import ENV_LOG_LEVEL, ENV_VERBOSE_LOGGING
from .utils.env import get_env_bool

LOG_FORMAT = "%(asctime)s %(levelname)-5s [%(name)s] %(message)s"
DATE_FORMAT = "%Y-%m-%d %H:%M:%S"


def get_log_level() -> str:
    """Get the log level from environment variable with fallback."""
    return (os.getenv(ENV_LOG_LEVEL, "WARNING") or "WARNING").upper()


def is_verbose() -> bool:
    """Return True when verbose logging was requested through the environment."""
    return get_env_bool(ENV_VERBOSE_LOGGING, False)


def get_logging_config(verbose: Optional[bool] = None) -> Dict[str, Any]:
    """Generate the logging configuration dictionary.

    Args:
        verbose: Override for the verbose switch; ``None`` reads the environment.
    """
    log_level = get_log_level()
    if verbose is None:
        verbose = is_verbose()
    package_level = "DEBUG" if verbose else log_level

    return {
        "version": 1,
        "disable_existing_loggers": False,
        "formatters": {
            "default": {
                "format": LOG_FORMAT,
                "datefmt": DATE_FORMAT,
            },
        },
        "handlers": {
            "default": {
                "formatter": "default",
                "class": "logging.StreamHandler",
                "stream": "ext://sys.stderr",
            },
        },
        "loggers": {
            "boolfix": {
                "handlers": ["default"],
                "level": package_level,
                "propagate": False,
            },
        },
        "root": {
            "level": log_level,
            "handlers": ["default"],
        },
    }


def configure_logging(verbose: Optional[bool] = None) -> None:
    """Configure logging for the entire application.

    This should be called once at startup, before any log output is produced.
    """
    logging.config.dictConfig(get_logging_config(verbose))
    logging.getLogger(__name__).debug(
        "Logging configured (level=%s, verbose=%s)", get_log_level(), verbose
    )
