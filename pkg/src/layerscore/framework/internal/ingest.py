# src/layerscore/framework/internal/ingest.py

"""
Schema and scores document parsing and serialization.

Schema documents are JSON::

    {"name": ..., "scale": 100.0,
     "layers": {"organization": [{"id": "5", "title": ..., "children": []}], ...}}

Scores documents are CSV (header ``node_id,score``) or JSON
(``{"name": ..., "scores": {"5": 54.5, ...}}``). Parsing here is syntactic;
``validate_schema`` and ``bind_assessment`` apply the semantic rules.
"""

import io
import json
import math
import re
from typing import Any, Dict, List, Literal, Optional, Tuple

import pandas as pd
from pydantic import BaseModel, ConfigDict, StrictStr, ValidationError

from layerscore.core.exceptions import (
    DocumentParseError,
    DocumentShapeError,
    DuplicateKeyError,
    NonNumericScoreError,
    Violation,
)
from layerscore.core.utils.logger import get_logger
from layerscore.framework.types import (
    FrameworkSchema,
    Layer,
    RawSchemaDoc,
    RawScoresDoc,
    SchemaNode,
)

logger = get_logger(__name__)

SchemaFormat = Literal["json"]
ScoresFormat = Literal["csv", "json"]

CSV_HEADER = ["node_id", "score"]
_PLAIN_DECIMAL = re.compile(r"^[+-]?(\d+(\.\d*)?|\.\d+)$")
_PANDAS_LINE = re.compile(r"line (\d+)")


class _NonFinite:
    """Stand-in for NaN/Infinity literals so they surface as E_NAN."""

    def __init__(self, literal: str):
        self.literal = literal

    def __repr__(self) -> str:
        return self.literal


class _DuplicateKey(Exception):
    def __init__(self, key: str):
        super().__init__(key)
        self.key = key


class _ScoresJson(BaseModel):
    model_config = ConfigDict(extra="forbid")

    name: StrictStr
    scores: Dict[str, Any]


def _loads(text: str, source: str, reject_duplicates: bool = False) -> Any:
    def pairs_hook(pairs: List[Tuple[str, Any]]) -> Dict[str, Any]:
        seen: Dict[str, Any] = {}
        for key, value in pairs:
            if reject_duplicates and key in seen:
                raise _DuplicateKey(key)
            seen[key] = value
        return seen

    try:
        return json.loads(
            text, object_pairs_hook=pairs_hook, parse_constant=_NonFinite
        )
    except json.JSONDecodeError as e:
        raise DocumentParseError(e.msg, e.lineno, e.colno, source=source) from e
    except ValueError as e:
        # Integers past the interpreter digit limit.
        raise DocumentParseError(str(e), 1, 1, source=source) from e


def parse_schema(
    text: str, format: SchemaFormat = "json", source: str = "<text>"
) -> RawSchemaDoc:
    """
    Parse a schema document.

    Args:
        text (str): Document text.
        format (str): Document format; only "json" is defined.
        source (str): Name used in error positions.

    Returns:
        RawSchemaDoc: The structurally parsed document.

    Raises:
        DocumentParseError: If the text is not well-formed JSON.
        DocumentShapeError: If required fields are missing or mistyped.
    """
    if format != "json":
        raise DocumentShapeError(
            [Violation("E_SHAPE", "format", f"unsupported schema format '{format}'")]
        )
    data = _loads(text, source)
    try:
        document = RawSchemaDoc.model_validate(data)
    except ValidationError as e:
        raise DocumentShapeError.from_validation(e) from e
    logger.debug("Parsed schema document '%s' from %s", document.name, source)
    return document


def _cell(value: Any) -> str:
    # Short rows come back as NaN floats rather than empty strings.
    return value.strip() if isinstance(value, str) else ""


def _number(cell: str, row: int) -> float:
    if not _PLAIN_DECIMAL.match(cell):
        raise NonNumericScoreError(cell, row=row)
    value = float(cell)
    if not math.isfinite(value):
        raise NonNumericScoreError(cell, row=row)
    return value


def _parse_scores_csv(text: str, source: str, name: str) -> RawScoresDoc:
    try:
        # The header is read as a data row so every line, the first data row
        # included, must have exactly as many fields as the header.
        frame = pd.read_csv(
            io.StringIO(text),
            header=None,
            on_bad_lines="error",
            dtype=str,
            keep_default_na=False,
            skip_blank_lines=False,
        )
    except pd.errors.EmptyDataError as e:
        raise DocumentParseError("document is empty", 1, 1, source=source) from e
    except pd.errors.ParserError as e:
        match = _PANDAS_LINE.search(str(e))
        line = int(match.group(1)) if match else 0
        raise DocumentParseError(str(e).strip(), line, 1, source=source) from e

    header = [_cell(column) for column in frame.iloc[0]]
    if header != CSV_HEADER:
        raise DocumentShapeError(
            [
                Violation(
                    "E_SHAPE",
                    "header",
                    f"expected header 'node_id,score', got '{','.join(header)}'",
                )
            ]
        )

    pairs: List[Tuple[str, float]] = []
    seen = set()
    # Line 1 is the header, so the first data row is line 2.
    for row, (node_id, cell) in enumerate(
        frame.iloc[1:].itertuples(index=False), start=2
    ):
        node_id, cell = _cell(node_id), _cell(cell)
        if not node_id and not cell:
            continue
        if not node_id:
            raise DocumentShapeError(
                [Violation("E_SHAPE", f"row {row}", "node_id is empty")]
            )
        if node_id in seen:
            raise DuplicateKeyError(node_id, row=row)
        seen.add(node_id)
        pairs.append((node_id, _number(cell, row)))
    return RawScoresDoc(name=name, pairs=tuple(pairs))


def _parse_scores_json(text: str, source: str) -> RawScoresDoc:
    try:
        data = _loads(text, source, reject_duplicates=True)
    except _DuplicateKey as e:
        raise DuplicateKeyError(e.key) from e
    try:
        document = _ScoresJson.model_validate(data)
    except ValidationError as e:
        raise DocumentShapeError.from_validation(e) from e

    pairs: List[Tuple[str, float]] = []
    for node_id, value in document.scores.items():
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise NonNumericScoreError(value, node_id=node_id)
        try:
            score = float(value)
        except OverflowError as e:
            raise NonNumericScoreError(value, node_id=node_id) from e
        # 1e400 parses to inf rather than raising.
        if not math.isfinite(score):
            raise NonNumericScoreError(value, node_id=node_id)
        pairs.append((node_id, score))
    return RawScoresDoc(name=document.name, pairs=tuple(pairs))


def parse_scores(
    text: str,
    format: ScoresFormat,
    source: str = "<text>",
    name: Optional[str] = None,
) -> RawScoresDoc:
    """
    Parse a scores document, preserving document order.

    Args:
        text (str): Document text.
        format (str): "csv" or "json".
        source (str): Name used in error positions.
        name (Optional[str]): Assessment name for CSV documents, which carry
            none of their own.

    Returns:
        RawScoresDoc: The (node_id, score) pairs.

    Raises:
        DocumentParseError: Malformed document.
        DocumentShapeError: Wrong header or fields.
        DuplicateKeyError: The same node id appears twice.
        NonNumericScoreError: A score is not a plain decimal number.
    """
    if format == "csv":
        document = _parse_scores_csv(text, source, name or "assessment")
    elif format == "json":
        document = _parse_scores_json(text, source)
    else:
        raise DocumentShapeError(
            [Violation("E_SHAPE", "format", f"unsupported scores format '{format}'")]
        )
    logger.debug("Parsed %d scores from %s", len(document.pairs), source)
    return document


def _node_document(node: SchemaNode) -> Dict[str, Any]:
    return {
        "id": node.id,
        "title": node.title,
        "children": [_node_document(child) for child in node.children],
    }


def export_schema(schema: FrameworkSchema) -> str:
    """
    Serialize a schema to the schema document format.

    Keys are emitted in a fixed order (name, scale, layers; layers in
    enumeration order; id, title, children per node), so the output is
    byte-stable across runs and export/parse/export is a fixpoint.
    """
    document = {
        "name": schema.name,
        "scale": schema.scale,
        "layers": {
            layer.value: [_node_document(root) for root in schema.roots(layer)]
            for layer in Layer
        },
    }
    return json.dumps(document, indent=2, ensure_ascii=False) + "\n"


def export_scores(document: RawScoresDoc, format: ScoresFormat) -> str:
    """Serialize scores as CSV or JSON, in document order."""
    if format == "csv":
        frame = pd.DataFrame(
            [(node_id, repr(float(score))) for node_id, score in document.pairs],
            columns=CSV_HEADER,
        )
        return frame.to_csv(index=False, lineterminator="\n")
    if format == "json":
        payload = {
            "name": document.name,
            "scores": {node_id: float(score) for node_id, score in document.pairs},
        }
        return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"
    raise DocumentShapeError(
        [Violation("E_SHAPE", "format", f"unsupported scores format '{format}'")]
    )
