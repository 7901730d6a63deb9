import logging
import sys
from functools import cache

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
DATE_FORMAT = "%Y-%m-%d %H:%M:%S"
VALID_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


def _resolve_level(level: str | None) -> str:
    if level is None:
        try:
            from src.config.settings import get_settings

            level = get_settings().log_level
        except Exception:
            level = "INFO"
    level = level.upper()
    return level if level in VALID_LEVELS else "INFO"


@cache
def get_logger(name: str, level: str | None = None) -> logging.Logger:
    """
    Get a configured logger instance.

    Records go to stderr: stdout is reserved for reports and sweep JSON,
    which must stay byte-identical between runs.

    Args:
        name: Logger name (typically __name__)
        level: Optional override for log level

    Returns:
        Configured logger instance
    """
    logger = logging.getLogger(name)

    if not logger.handlers:
        resolved = _resolve_level(level)
        logger.setLevel(getattr(logging, resolved))

        handler = logging.StreamHandler(sys.stderr)
        handler.setLevel(getattr(logging, resolved))
        handler.setFormatter(logging.Formatter(fmt=LOG_FORMAT, datefmt=DATE_FORMAT))
        logger.addHandler(handler)

        logger.propagate = False

    return logger


def setup_logging(level: str | None = None) -> None:
    """
    Configure the root logger used by module-level ``logging.getLogger`` calls.

    Args:
        level: Optional override for log level
    """
    resolved = _resolve_level(level)

    root_logger = logging.getLogger()
    root_logger.setLevel(getattr(logging, resolved))

    for handler in root_logger.handlers[:]:
        root_logger.removeHandler(handler)

    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(fmt=LOG_FORMAT, datefmt=DATE_FORMAT))
    root_logger.addHandler(handler)

    # sympy's polys layer is chatty at DEBUG
    logging.getLogger("sympy").setLevel(logging.WARNING)
