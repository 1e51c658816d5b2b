import sys

from loguru import logger

LOG_FORMAT = "<green>{time:HH:mm:ss}</green> | <level>{level: <7}</level> | {name}:{function} - {message}"


def setup_logging(level: str = "INFO") -> None:
    """stderr only; stdout is reserved for JSON output."""
    logger.remove()
    logger.add(sys.stderr, level=level.upper(), format=LOG_FORMAT)
