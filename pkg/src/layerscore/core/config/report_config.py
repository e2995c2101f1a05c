# report_config.py

from typing import Literal

from pydantic import Field

from .base import BaseConfig

ReportFormat = Literal["table", "json", "csv"]


class ReportSettings(BaseConfig):
    """Default rendering options applied when the CLI flags are omitted."""

    format: ReportFormat = Field("table", description="Output document format.")
    precision: int = Field(
        1, ge=0, le=6, description="Decimal places for displayed values."
    )
