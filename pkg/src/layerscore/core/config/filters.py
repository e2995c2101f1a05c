# src/layerscore/core/config/filters.py

import logging


class MetadataFilter(logging.Filter):
    """
    Injects service-level metadata into log records.
    """

    def __init__(self, service_name: str, version: str):
        super().__init__()
        self.service_name = service_name
        self.version = version

    def filter(self, record: logging.LogRecord) -> bool:
        record.service_name = self.service_name
        record.version = self.version
        return True
