# src/layerscore/core/utils/logger.py

import logging


def get_logger(name: str) -> logging.Logger:
    """
    Retrieves a logger with the specified name.

    Modules call this at import time; handlers are attached later by
    ``setup_logging`` on the package logger, so records propagate to it.

    Args:
        name (str): The name of the logger.

    Returns:
        logging.Logger: Logger instance.
    """
    return logging.getLogger(name)
