# src/layerscore/core/config/__init__.py

from .config_logger import setup_logging
from .logging_config import LoggingSettings
from .report_config import ReportSettings
from .settings import Settings, load_settings

__all__ = [
    "LoggingSettings",
    "ReportSettings",
    "Settings",
    "load_settings",
    "setup_logging",
]
