import sys

from loguru import logger


def configure_logging(level: str) -> None:
    """Send loguru output to stderr at the given level."""
    logger.remove()
    logger.add(sys.stderr, level=level.upper())


__all__ = ["logger", "configure_logging"]
