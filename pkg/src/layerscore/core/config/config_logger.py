import logging
import sys
from logging.handlers import RotatingFileHandler
from typing import List

from pythonjsonlogger import jsonlogger

from .filters import MetadataFilter
from .logging_config import LoggingSettings

PACKAGE_LOGGER = "layerscore"
_HANDLER_MARK = "_layerscore_handler"


def setup_logging(
    logging_settings: LoggingSettings,
    service_name: str,
    version: str,
) -> logging.Logger:
    """
    Configure the package logger from the provided LoggingSettings.
    Supports both plain and structured (JSON) logging.

    Console output goes to stderr; stdout is reserved for report documents.
    Calling this again replaces the handlers installed by the previous call.
    """
    logger = logging.getLogger(PACKAGE_LOGGER)
    logger.setLevel(logging_settings.log_level)

    for handler in [h for h in logger.handlers if getattr(h, _HANDLER_MARK, False)]:
        logger.removeHandler(handler)
        handler.close()

    handlers: List[logging.Handler] = []
    if logging_settings.wants("console"):
        handlers.append(logging.StreamHandler(sys.stderr))
    if logging_settings.wants("file") and logging_settings.log_file_path:
        handlers.append(
            RotatingFileHandler(
                logging_settings.log_file_path,
                maxBytes=10**6,  # 1MB
                backupCount=5,
                encoding="utf-8",
            )
        )

    formatter: logging.Formatter = (
        jsonlogger.JsonFormatter(
            "%(asctime)s %(levelname)s %(name)s %(service_name)s %(message)s"
        )
        if logging_settings.structured
        else logging.Formatter(logging_settings.log_format)
    )

    metadata_filter = MetadataFilter(service_name=service_name, version=version)
    for handler in handlers:
        handler.setFormatter(formatter)
        handler.addFilter(metadata_filter)
        setattr(handler, _HANDLER_MARK, True)
        logger.addHandler(handler)
    return logger
