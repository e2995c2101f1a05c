# settings.py

from __future__ import annotations

from pathlib import Path
from typing import Any, Dict, Optional

import yaml
from pydantic import Field, ValidationError

from ..exceptions import ConfigurationError
from ..utils.logger import get_logger
from .base import BaseConfig
from .logging_config import LoggingSettings
from .report_config import ReportSettings

logger = get_logger(__name__)

DEFAULT_CONFIG_PATH = Path(__file__).with_name("config.yaml")


class Settings(BaseConfig):
    """
    Centralized settings that aggregates all configuration modules.
    """

    service_name: str = Field(
        default="layerscore", description="Service name for logging"
    )
    logging: LoggingSettings = Field(default_factory=LoggingSettings)
    report: ReportSettings = Field(default_factory=ReportSettings)


def _read_yaml(path: Path) -> Dict[str, Any]:
    try:
        with path.open("r", encoding="utf-8") as handle:
            data = yaml.safe_load(handle) or {}
    except OSError as e:
        raise ConfigurationError(f"cannot read config file: {e}", source=str(path))
    except yaml.YAMLError as e:
        raise ConfigurationError(f"malformed YAML: {e}", source=str(path))
    if not isinstance(data, dict):
        raise ConfigurationError("top level must be a mapping", source=str(path))
    return data


def load_settings(config_path: Optional[Path] = None) -> Settings:
    """
    Load settings from the bundled defaults, merged with an optional user file.

    Args:
        config_path (Optional[Path]): YAML file whose keys override the defaults.

    Returns:
        Settings: Validated settings.

    Raises:
        ConfigurationError: If a file cannot be read or fails validation.
    """
    layers = [_read_yaml(DEFAULT_CONFIG_PATH)]
    source = str(DEFAULT_CONFIG_PATH)
    if config_path is not None:
        layers.append(_read_yaml(Path(config_path)))
        source = str(config_path)
    try:
        loaded = Settings.from_layers(*layers)
    except ValidationError as e:
        raise ConfigurationError.from_validation(e, source=source) from e
    logger.debug("Loaded settings from %s", source)
    return loaded
