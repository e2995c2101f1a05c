# src/layerscore/framework/internal/engine.py

"""
Aggregation engine.

Values are computed bottom-up: a leaf is worth its raw score, an internal
node the arithmetic mean of its children, a layer the mean of its roots and
the overall score the mean of the layers. Because every step is an
unweighted mean, the overall score is a convex combination of leaf scores and
the weight of each leaf (its sensitivity) depends on the tree shape only.
"""

import math
from typing import Dict, List, Optional

from layerscore.core.exceptions import NotLeafError, UnknownNodeError
from layerscore.core.utils.logger import get_logger
from layerscore.framework.types import (
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

logger = get_logger(__name__)


def _mean(values: List[float]) -> float:
    return math.fsum(values) / len(values)


def _evaluate_node(
    node: SchemaNode, assessment: Assessment, out: Dict[str, NodeValue]
) -> float:
    if node.is_leaf:
        value = assessment.score(node.id)
    else:
        value = _mean(
            [_evaluate_node(child, assessment, out) for child in node.children]
        )
    out[node.id] = NodeValue(id=node.id, value=value, is_leaf=node.is_leaf)
    return value


def evaluate(schema: FrameworkSchema, assessment: Assessment) -> EvaluationResult:
    """
    Evaluate an assessment against its schema.

    Args:
        schema (FrameworkSchema): The validated schema.
        assessment (Assessment): Scores bound to ``schema`` by ``bind_assessment``.

    Returns:
        EvaluationResult: Unrounded values for every node, layer and overall.
    """
    per_node: Dict[str, NodeValue] = {}
    per_layer: Dict[Layer, LayerValue] = {}
    for layer, roots in schema.layers.items():
        root_values = [_evaluate_node(root, assessment, per_node) for root in roots]
        per_layer[layer] = LayerValue(
            layer=layer, value=_mean(root_values), ideal=schema.scale
        )
    overall = _mean([layer_value.value for layer_value in per_layer.values()])
    logger.debug(
        "Evaluated '%s' on schema '%s': overall=%r",
        assessment.name,
        schema.name,
        overall,
    )
    return EvaluationResult(
        schema_name=schema.name,
        assessment_name=assessment.name,
        scale=schema.scale,
        per_node=per_node,
        per_layer=per_layer,
        overall=overall,
    )


def gap_report(
    result: EvaluationResult, schema: Optional[FrameworkSchema] = None
) -> GapReport:
    """
    Compute ideal/achievement/priority for every layer and rank by priority.

    Args:
        result (EvaluationResult): Output of ``evaluate``.
        schema (Optional[FrameworkSchema]): When given, gaps are also computed
            for each layer root node (the MISA controls).

    Returns:
        GapReport: Layer gaps in enumeration order, the priority ranking
            (ties broken by enumeration order) and the root-node gaps.
    """
    layers = tuple(
        LayerGap(
            layer=layer_value.layer,
            ideal=layer_value.ideal,
            achievement=layer_value.achievement,
            priority=layer_value.priority,
        )
        for layer_value in sorted(
            result.per_layer.values(), key=lambda v: v.layer.rank
        )
    )
    # Lowest achievement first is the same order as highest priority first.
    ranking = tuple(
        gap.layer
        for gap in sorted(layers, key=lambda g: (g.achievement, g.layer.rank))
    )

    controls: List[ControlGap] = []
    if schema is not None:
        for layer, roots in schema.layers.items():
            for root in roots:
                achievement = result.value(root.id)
                controls.append(
                    ControlGap(
                        node_id=root.id,
                        title=root.title,
                        layer=layer,
                        ideal=result.scale,
                        achievement=achievement,
                        priority=result.scale - achievement,
                    )
                )
        order = {gap.node_id: index for index, gap in enumerate(controls)}
        controls.sort(key=lambda g: (g.achievement, order[g.node_id]))

    return GapReport(
        scale=result.scale,
        layers=layers,
        ranking=ranking,
        controls=tuple(controls),
    )


def sensitivity(schema: FrameworkSchema, leaf_id: str) -> float:
    """
    Exact rate of change of the overall score per unit change of one leaf.

    Equals 1 / (layers * roots in the leaf's layer * children of every
    internal node on the path down to the leaf).

    Raises:
        UnknownNodeError: If ``leaf_id`` is not in the schema.
        NotLeafError: If ``leaf_id`` names an internal node.
    """
    if leaf_id not in schema:
        raise UnknownNodeError(leaf_id)
    if not schema.node(leaf_id).is_leaf:
        raise NotLeafError(leaf_id)

    denominator = schema.layer_count * len(schema.roots(schema.layer_of(leaf_id)))
    for ancestor in schema.path_to(leaf_id)[:-1]:
        denominator *= len(ancestor.children)
    return 1.0 / denominator


def sensitivities(schema: FrameworkSchema) -> Dict[str, float]:
    """Sensitivity of every leaf, in leaf order."""
    return {leaf_id: sensitivity(schema, leaf_id) for leaf_id in schema.leaf_ids()}
