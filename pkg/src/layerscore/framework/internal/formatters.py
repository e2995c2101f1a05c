# src/layerscore/framework/internal/formatters.py

"""
Report rendering.

Every renderer takes computed results and returns document text in one of
three formats: a fixed-width ``table`` for people, ``json`` and ``csv`` for
machines. Rounding happens here and nowhere else; machine formats carry the
unrounded engine values next to the rounded ``display`` strings.
"""

import json
import math
from decimal import ROUND_HALF_UP, Decimal
from enum import Enum
from typing import Any, Callable, Dict, List, Mapping, Optional, Sequence

import pandas as pd
from pydantic import BaseModel, ConfigDict, Field
from tabulate import tabulate

from layerscore.core.exceptions import LayerscoreError
from layerscore.core.utils.logger import get_logger
from layerscore.framework.types import (
    Assessment,
    EvaluationResult,
    FrameworkSchema,
    GapReport,
)

logger = get_logger(__name__)

CHART_HEADER = ["layer", "ideal", "achievement", "priority"]


class ReportFormat(str, Enum):
    """Output formats every renderer supports"""

    TABLE = "table"
    JSON = "json"
    CSV = "csv"


class FormattingError(LayerscoreError):
    """Raised when a report cannot be rendered."""

    exit_code = 2

    def __init__(self, message: str):
        super().__init__(message, code="E_RENDER")


class RenderOptions(BaseModel):
    """Output format and number of decimal places for displayed values."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    format: ReportFormat = ReportFormat.TABLE
    precision: int = Field(1, ge=0, le=6)


def round_half_up(value: float, precision: int) -> str:
    """
    Format ``value`` with ``precision`` decimals, rounding halves away from zero.

    The shortest decimal representation of the float is rounded, so 57.25
    displays as "57.3" at precision 1 even though the binary value is inexact
    for other halves like 0.15.
    """
    if not math.isfinite(value):
        raise FormattingError(f"cannot display non-finite value {value!r}")
    quantum = Decimal(1).scaleb(-precision)
    rounded = Decimal(repr(value)).quantize(quantum, rounding=ROUND_HALF_UP)
    if rounded.is_zero():
        rounded = abs(rounded)
    return format(rounded, "f")


def _table(
    headers: Sequence[str], rows: List[List[str]], colalign: Sequence[str]
) -> str:
    text = tabulate(
        rows,
        headers=headers,
        tablefmt="simple",
        disable_numparse=True,
        colalign=colalign,
    )
    return "\n".join(line.rstrip() for line in text.splitlines()) + "\n"


def _json(payload: Any) -> str:
    return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"


def _csv(rows: List[List[str]], columns: Sequence[str]) -> str:
    frame = pd.DataFrame(rows, columns=list(columns))
    return frame.to_csv(index=False, lineterminator="\n")


def _dispatch(
    what: str,
    opts: RenderOptions,
    table: Callable[[], str],
    as_json: Callable[[], str],
    as_csv: Callable[[], str],
) -> str:
    renderers = {
        ReportFormat.TABLE: table,
        ReportFormat.JSON: as_json,
        ReportFormat.CSV: as_csv,
    }
    logger.debug("Rendering %s as %s", what, opts.format.value)
    try:
        return renderers[opts.format]()
    except FormattingError:
        raise
    except Exception as e:
        logger.error(f"Error rendering {what}: {str(e)}")
        raise FormattingError(f"Failed to render {what}: {str(e)}") from e


def render_result(
    result: EvaluationResult, schema: FrameworkSchema, opts: RenderOptions
) -> str:
    """
    Render an evaluation result.

    The table lists every node of every layer, grouped under the layer with
    its layer score on the first row of the group, and ends with the
    "Overall Score" row.

    Args:
        result (EvaluationResult): Output of ``evaluate`` on ``schema``.
        schema (FrameworkSchema): Supplies titles and the row order.
        opts (RenderOptions): Format and display precision.

    Returns:
        str: The rendered document.
    """
    p = opts.precision

    def table() -> str:
        rows: List[List[str]] = []
        for layer, roots in schema.layers.items():
            first = True
            for root in roots:
                for node in root.walk():
                    rows.append(
                        [
                            layer.display_name if first else "",
                            round_half_up(result.per_layer[layer].value, p)
                            if first
                            else "",
                            node.title,
                            node.id,
                            round_half_up(result.value(node.id), p),
                        ]
                    )
                    first = False
        rows.append(["Overall Score", "", "", "", round_half_up(result.overall, p)])
        return _table(
            ["Layer", "Layer Score", "Title", "Node", "Score"],
            rows,
            ("left", "right", "left", "left", "right"),
        )

    def as_json() -> str:
        layers = []
        for layer, roots in schema.layers.items():
            value = result.per_layer[layer].value
            layers.append(
                {
                    "layer": layer.value,
                    "title": layer.display_name,
                    "value": value,
                    "display": round_half_up(value, p),
                    "nodes": [
                        {
                            "id": node.id,
                            "title": node.title,
                            "leaf": node.is_leaf,
                            "value": result.value(node.id),
                            "display": round_half_up(result.value(node.id), p),
                        }
                        for root in roots
                        for node in root.walk()
                    ],
                }
            )
        return _json(
            {
                "schema": result.schema_name,
                "assessment": result.assessment_name,
                "scale": result.scale,
                "precision": p,
                "layers": layers,
                "overall": {
                    "value": result.overall,
                    "display": round_half_up(result.overall, p),
                },
                "readiness": result.readiness,
            }
        )

    def as_csv() -> str:
        rows: List[List[str]] = []
        for layer, roots in schema.layers.items():
            for root in roots:
                for node in root.walk():
                    value = result.value(node.id)
                    rows.append(
                        [
                            "node",
                            layer.value,
                            node.id,
                            node.title,
                            repr(value),
                            round_half_up(value, p),
                        ]
                    )
            value = result.per_layer[layer].value
            rows.append(
                [
                    "layer",
                    layer.value,
                    "",
                    layer.display_name,
                    repr(value),
                    round_half_up(value, p),
                ]
            )
        rows.append(
            [
                "overall",
                "",
                "",
                "Overall Score",
                repr(result.overall),
                round_half_up(result.overall, p),
            ]
        )
        return _csv(rows, ["kind", "layer", "node_id", "title", "value", "display"])

    return _dispatch("evaluation result", opts, table, as_json, as_csv)


def render_chart_data(gaps: GapReport, opts: RenderOptions) -> str:
    """
    Render the per-layer ideal/achievement/priority series behind a gap chart.

    Rows follow the priority ranking (largest gap first). The CSV form has
    exactly the columns ``layer,ideal,achievement,priority`` with unrounded
    values; plotting is left to external tools.
    """
    p = opts.precision
    ranked = gaps.ranked()

    def table() -> str:
        rows = [
            [
                gap.layer.display_name,
                round_half_up(gap.ideal, p),
                round_half_up(gap.achievement, p),
                round_half_up(gap.priority, p),
            ]
            for gap in ranked
        ]
        return _table(
            ["Layer", "Ideal", "Achievement", "Priority"],
            rows,
            ("left", "right", "right", "right"),
        )

    def as_json() -> str:
        return _json(
            {
                "scale": gaps.scale,
                "series": [
                    {
                        "layer": gap.layer.value,
                        "ideal": gap.ideal,
                        "achievement": gap.achievement,
                        "priority": gap.priority,
                        "display": {
                            "ideal": round_half_up(gap.ideal, p),
                            "achievement": round_half_up(gap.achievement, p),
                            "priority": round_half_up(gap.priority, p),
                        },
                    }
                    for gap in ranked
                ],
            }
        )

    def as_csv() -> str:
        rows = [
            [
                gap.layer.value,
                repr(gap.ideal),
                repr(gap.achievement),
                repr(gap.priority),
            ]
            for gap in ranked
        ]
        return _csv(rows, CHART_HEADER)

    return _dispatch("chart data", opts, table, as_json, as_csv)


def render_gap_report(gaps: GapReport, opts: RenderOptions) -> str:
    """
    Render the full gap report: ranked layers, the strongest and weakest
    layer, and the gap of every control (layer root node) when known.
    """
    p = opts.precision
    ranked = gaps.ranked()

    def table() -> str:
        text = _table(
            ["Rank", "Layer", "Ideal", "Achievement", "Priority"],
            [
                [
                    str(rank),
                    gap.layer.display_name,
                    round_half_up(gap.ideal, p),
                    round_half_up(gap.achievement, p),
                    round_half_up(gap.priority, p),
                ]
                for rank, gap in enumerate(ranked, start=1)
            ],
            ("right", "left", "right", "right", "right"),
        )
        text += (
            f"\nWeakest layer: {gaps.weakest.display_name}\n"
            f"Strongest layer: {gaps.strongest.display_name}\n"
        )
        if gaps.controls:
            text += "\n" + _table(
                ["Node", "Title", "Layer", "Ideal", "Achievement", "Priority"],
                [
                    [
                        gap.node_id,
                        gap.title,
                        gap.layer.display_name,
                        round_half_up(gap.ideal, p),
                        round_half_up(gap.achievement, p),
                        round_half_up(gap.priority, p),
                    ]
                    for gap in gaps.controls
                ],
                ("left", "left", "left", "right", "right", "right"),
            )
        return text

    def as_json() -> str:
        return _json(
            {
                "scale": gaps.scale,
                "weakest": gaps.weakest.value,
                "strongest": gaps.strongest.value,
                "layers": [
                    {
                        "rank": rank,
                        "layer": gap.layer.value,
                        "ideal": gap.ideal,
                        "achievement": gap.achievement,
                        "priority": gap.priority,
                        "display": {
                            "achievement": round_half_up(gap.achievement, p),
                            "priority": round_half_up(gap.priority, p),
                        },
                    }
                    for rank, gap in enumerate(ranked, start=1)
                ],
                "controls": [
                    {
                        "node_id": gap.node_id,
                        "title": gap.title,
                        "layer": gap.layer.value,
                        "ideal": gap.ideal,
                        "achievement": gap.achievement,
                        "priority": gap.priority,
                        "display": {
                            "achievement": round_half_up(gap.achievement, p),
                            "priority": round_half_up(gap.priority, p),
                        },
                    }
                    for gap in gaps.controls
                ],
            }
        )

    def as_csv() -> str:
        rows = [
            [
                "layer",
                str(rank),
                gap.layer.value,
                "",
                gap.layer.display_name,
                repr(gap.ideal),
                repr(gap.achievement),
                repr(gap.priority),
                round_half_up(gap.achievement, p),
                round_half_up(gap.priority, p),
            ]
            for rank, gap in enumerate(ranked, start=1)
        ]
        rows.extend(
            [
                "control",
                str(rank),
                gap.layer.value,
                gap.node_id,
                gap.title,
                repr(gap.ideal),
                repr(gap.achievement),
                repr(gap.priority),
                round_half_up(gap.achievement, p),
                round_half_up(gap.priority, p),
            ]
            for rank, gap in enumerate(gaps.controls, start=1)
        )
        return _csv(
            rows,
            [
                "kind",
                "rank",
                "layer",
                "node_id",
                "title",
                "ideal",
                "achievement",
                "priority",
                "display_achievement",
                "display_priority",
            ],
        )

    return _dispatch("gap report", opts, table, as_json, as_csv)


def render_sensitivities(
    sensitivities: Mapping[str, float], schema: FrameworkSchema, opts: RenderOptions
) -> str:
    """
    Render leaf sensitivities.

    Sensitivities are rates, not scores, so they are printed exactly and
    ``precision`` does not apply.
    """

    def table() -> str:
        rows = [
            [
                schema.layer_of(leaf_id).display_name,
                leaf_id,
                schema.node(leaf_id).title,
                repr(value),
            ]
            for leaf_id, value in sensitivities.items()
        ]
        return _table(
            ["Layer", "Node", "Title", "Sensitivity"],
            rows,
            ("left", "left", "left", "right"),
        )

    def as_json() -> str:
        return _json(
            {
                "schema": schema.name,
                "sensitivities": [
                    {
                        "node_id": leaf_id,
                        "layer": schema.layer_of(leaf_id).value,
                        "title": schema.node(leaf_id).title,
                        "sensitivity": value,
                    }
                    for leaf_id, value in sensitivities.items()
                ],
            }
        )

    def as_csv() -> str:
        rows = [
            [
                leaf_id,
                schema.layer_of(leaf_id).value,
                schema.node(leaf_id).title,
                repr(value),
            ]
            for leaf_id, value in sensitivities.items()
        ]
        return _csv(rows, ["node_id", "layer", "title", "sensitivity"])

    return _dispatch("sensitivities", opts, table, as_json, as_csv)


def render_validation(
    schema: FrameworkSchema,
    assessment: Optional[Assessment],
    opts: RenderOptions,
) -> str:
    """Summarize a successful validation of a schema and, if given, its scores."""
    summary: Dict[str, Any] = {
        "schema": schema.name,
        "layers": schema.layer_count,
        "nodes": len(schema.node_ids()),
        "leaves": len(schema.leaf_ids()),
    }
    if assessment is not None:
        summary["assessment"] = assessment.name
        summary["scores"] = len(assessment.scores)

    def table() -> str:
        lines = [
            f"schema '{schema.name}' is valid: {summary['layers']} layers, "
            f"{summary['nodes']} nodes, {summary['leaves']} leaves"
        ]
        if assessment is not None:
            lines.append(
                f"assessment '{assessment.name}' is valid: "
                f"{summary['scores']} scores"
            )
        return "\n".join(lines) + "\n"

    def as_json() -> str:
        return _json({"valid": True, **summary})

    def as_csv() -> str:
        rows = [[key, str(value)] for key, value in summary.items()]
        return _csv(rows, ["key", "value"])

    return _dispatch("validation summary", opts, table, as_json, as_csv)
