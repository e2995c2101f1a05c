from .documents import RawNode, RawSchemaDoc, RawScoresDoc
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
    id_sort_key,
)

__all__ = [
    "Assessment",
    "ControlGap",
    "EvaluationResult",
    "FrameworkSchema",
    "GapReport",
    "Layer",
    "LayerGap",
    "LayerValue",
    "NodeValue",
    "RawNode",
    "RawSchemaDoc",
    "RawScoresDoc",
    "SchemaNode",
    "id_sort_key",
]
