"""Logging setup."""
import sys
from typing import Optional

from loguru import logger
from tqdm import tqdm

from config import LOG_FILE, LOG_LEVEL

CONSOLE_FORMAT = "<green>{time:HH:mm:ss}</green> | <level>{level: <8}</level> | <cyan>{name}</cyan> - <level>{message}</level>"
FILE_FORMAT = "{time:YYYY-MM-DD HH:mm:ss} | {level: <8} | {name}:{function}:{line} - {message}"


def _console(message) -> None:
    # through tqdm so records do not tear an active progress bar
    tqdm.write(str(message), end="", file=sys.stderr)


def setup_logging(level: Optional[str] = None, log_file: Optional[str] = LOG_FILE):
    """Configure loguru with a console sink and, unless ``log_file`` is None, a rotating file sink.

    Dropped-input warnings (duplicate edges, skipped extra links, discarded
    stubs) go to the file only.
    """
    level = level or LOG_LEVEL
    logger.remove()

    logger.add(
        _console,
        format=CONSOLE_FORMAT,
        level=level,
        colorize=True,
        filter=lambda record: record["level"].name != "WARNING",
    )

    if log_file:
        logger.add(
            log_file,
            format=FILE_FORMAT,
            level=level,
            rotation="10 MB",
            retention="1 month",
            compression="zip",
        )

    return logger
