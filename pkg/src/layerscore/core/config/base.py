# src/layerscore/core/config/base.py

from typing import Any, Dict, Mapping, Type, TypeVar

from pydantic import BaseModel

T = TypeVar("T", bound="BaseConfig")


def deep_merge(base: Mapping[str, Any], override: Mapping[str, Any]) -> Dict[str, Any]:
    """Merge ``override`` into ``base``; nested mappings merge key by key."""
    merged = dict(base)
    for key, value in override.items():
        current = merged.get(key)
        if isinstance(value, Mapping) and isinstance(current, Mapping):
            merged[key] = deep_merge(current, value)
        else:
            merged[key] = value
    return merged


class BaseConfig(BaseModel):
    """Base configuration class to set common Pydantic V2 settings."""

    model_config = {
        "extra": "forbid",             # Unknown keys in config files are errors
        "validate_assignment": True,    # Validate fields when they are assigned
        "populate_by_name": True,
        "frozen": False,
    }

    @classmethod
    def from_layers(cls: Type[T], *layers: Mapping[str, Any]) -> T:
        """
        Validate the deep merge of several raw config mappings.

        Later layers win, so the bundled defaults go first and the user file last.

        Raises:
            pydantic.ValidationError: If the merged document is invalid.
        """
        data: Dict[str, Any] = {}
        for layer in layers:
            data = deep_merge(data, layer)
        return cls.model_validate(data)
