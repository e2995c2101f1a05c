# src/layerscore/framework/internal/validation.py

"""
Schema validation and assessment binding.

Both operations are total: every violation is collected before a single
error is raised, so a human editing a document sees all problems at once.
"""

import math
from collections import Counter
from typing import Any, List, Mapping, Optional, Union

from pydantic import ValidationError

from layerscore.core.exceptions import (
    AssessmentBindingError,
    DocumentShapeError,
    SchemaValidationError,
    Violation,
)
from layerscore.core.utils.logger import get_logger
from layerscore.framework.types import (
    Assessment,
    FrameworkSchema,
    Layer,
    RawNode,
    RawSchemaDoc,
    RawScoresDoc,
    SchemaNode,
)

logger = get_logger(__name__)


def _as_float(value: Union[int, float]) -> float:
    # Integers too large for a float become inf so range checks reject them.
    try:
        return float(value)
    except OverflowError:
        return math.inf


def _build_node(raw: RawNode) -> SchemaNode:
    return SchemaNode(
        id=raw.id,
        title=raw.title,
        children=tuple(_build_node(child) for child in raw.children),
    )


def _check_nesting(raw: RawNode, violations: List[Violation]) -> None:
    for child in raw.children:
        if not child.id.startswith(raw.id + "."):
            violations.append(
                Violation(
                    "E_BAD_PREFIX",
                    child.id,
                    f"child id is not prefixed by its parent id '{raw.id}.'",
                )
            )
        _check_nesting(child, violations)


def _walk_ids(raw: RawNode) -> List[str]:
    ids = [raw.id]
    for child in raw.children:
        ids.extend(_walk_ids(child))
    return ids


def validate_schema(
    raw_schema: Union[RawSchemaDoc, Mapping[str, Any]]
) -> FrameworkSchema:
    """
    Validate a raw schema description and build a FrameworkSchema.

    Args:
        raw_schema: A parsed schema document, or a plain mapping with the
            same shape.

    Returns:
        FrameworkSchema: The validated schema.

    Raises:
        DocumentShapeError: If a plain mapping does not have the document shape.
        SchemaValidationError: Listing every structural violation found.
    """
    if not isinstance(raw_schema, RawSchemaDoc):
        try:
            raw_schema = RawSchemaDoc.model_validate(raw_schema)
        except ValidationError as e:
            raise DocumentShapeError.from_validation(e) from e

    violations: List[Violation] = []

    scale = _as_float(raw_schema.scale)
    if not math.isfinite(scale) or scale <= 0:
        violations.append(
            Violation(
                "E_BAD_SCALE",
                "scale",
                f"scale must be a positive number, got {raw_schema.scale}",
            )
        )

    all_ids: List[str] = []
    for layer in Layer:
        roots = raw_schema.layers.get(layer)
        if not roots:
            violations.append(
                Violation("E_MISSING_LAYER", layer.value, "layer has no root nodes")
            )
            if roots is not None:
                violations.append(
                    Violation(
                        "E_EMPTY_NODE",
                        layer.value,
                        "layer is declared with an empty node list",
                    )
                )
            continue
        for root in roots:
            _check_nesting(root, violations)
            all_ids.extend(_walk_ids(root))

    counts = Counter(all_ids)
    for node_id in dict.fromkeys(all_ids):
        if counts[node_id] > 1:
            violations.append(
                Violation(
                    "E_DUP_ID",
                    node_id,
                    f"id is declared {counts[node_id]} times; ids must be unique",
                )
            )

    if violations:
        for violation in violations:
            logger.info("Schema violation: %s", violation)
        raise SchemaValidationError(violations)

    schema = FrameworkSchema(
        name=raw_schema.name,
        scale=scale,
        layers={
            layer: tuple(_build_node(root) for root in raw_schema.layers[layer])
            for layer in Layer
        },
    )
    logger.debug(
        "Validated schema '%s': %d nodes, %d leaves",
        schema.name,
        len(all_ids),
        len(schema.leaf_ids()),
    )
    return schema


def _as_score(value: Any) -> Optional[float]:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        return None
    return _as_float(value)


def bind_assessment(
    schema: FrameworkSchema,
    raw_scores: Union[Mapping[str, Any], RawScoresDoc],
    name: Optional[str] = None,
) -> Assessment:
    """
    Bind raw scores to the leaves of a validated schema.

    Args:
        schema (FrameworkSchema): A validated schema.
        raw_scores: Leaf id to score mapping, or a parsed scores document.
        name (Optional[str]): Assessment name; defaults to the document name.

    Returns:
        Assessment: Scores covering every leaf exactly once, all in range.

    Raises:
        AssessmentBindingError: Listing every unknown, out-of-range and
            missing score.
    """
    if isinstance(raw_scores, RawScoresDoc):
        name = name or raw_scores.name
        scores = raw_scores.as_mapping()
    else:
        scores = dict(raw_scores)
    name = name or "assessment"

    violations: List[Violation] = []
    accepted = {}
    for node_id, raw_value in scores.items():
        if node_id not in schema:
            violations.append(
                Violation("E_UNKNOWN_NODE", node_id, "no such node in the schema")
            )
            continue
        if not schema.node(node_id).is_leaf:
            violations.append(
                Violation(
                    "E_UNKNOWN_NODE",
                    node_id,
                    "internal node; scores attach to leaves only",
                )
            )
            continue
        value = _as_score(raw_value)
        if value is None or not (
            math.isfinite(value) and 0.0 <= value <= schema.scale
        ):
            violations.append(
                Violation(
                    "E_RANGE",
                    node_id,
                    f"score {raw_value!r} outside [0, {schema.scale:g}]",
                )
            )
            continue
        accepted[node_id] = value

    for leaf_id in schema.leaf_ids():
        if leaf_id not in scores:
            violations.append(
                Violation("E_MISSING_SCORE", leaf_id, "leaf has no score")
            )

    if violations:
        for violation in violations:
            logger.info("Assessment violation: %s", violation)
        raise AssessmentBindingError(violations)

    logger.debug("Bound assessment '%s' with %d scores", name, len(accepted))
    return Assessment(name=name, scores=accepted)
