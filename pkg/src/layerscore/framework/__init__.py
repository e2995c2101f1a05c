from .client.assessment_client import AssessmentClient
from .internal.engine import evaluate, gap_report, sensitivities, sensitivity
from .internal.formatters import (
    FormattingError,
    RenderOptions,
    ReportFormat,
    render_chart_data,
    render_gap_report,
    render_result,
    render_sensitivities,
    render_validation,
    round_half_up,
)
from .internal.ingest import export_schema, export_scores, parse_schema, parse_scores
from .internal.misa import (
    BUILTIN_MISA_REF,
    MisaControl,
    control_title,
    layer_of_control,
    misa_control,
    misa_controls,
    misa_framework,
)
from .internal.validation import bind_assessment, validate_schema
from .types import (
    Assessment,
    ControlGap,
    EvaluationResult,
    FrameworkSchema,
    GapReport,
    Layer,
    LayerGap,
    LayerValue,
    NodeValue,
    SchemaNode,
)

__all__ = [
    "Assessment",
    "AssessmentClient",
    "BUILTIN_MISA_REF",
    "ControlGap",
    "EvaluationResult",
    "FormattingError",
    "FrameworkSchema",
    "GapReport",
    "Layer",
    "LayerGap",
    "LayerValue",
    "MisaControl",
    "NodeValue",
    "RenderOptions",
    "ReportFormat",
    "SchemaNode",
    "bind_assessment",
    "control_title",
    "evaluate",
    "export_schema",
    "export_scores",
    "gap_report",
    "layer_of_control",
    "misa_control",
    "misa_controls",
    "misa_framework",
    "parse_schema",
    "parse_scores",
    "render_chart_data",
    "render_gap_report",
    "render_result",
    "render_sensitivities",
    "render_validation",
    "round_half_up",
    "sensitivities",
    "sensitivity",
    "validate_schema",
]
