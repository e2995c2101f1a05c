# src/layerscore/__init__.py

# Expose submodules
from .core import config, exceptions
from .framework import client as assessment_client

# Package metadata
__version__ = "0.1.0"
__all__ = [
    "assessment_client",
    "config",
    "exceptions",
    "framework",
]
