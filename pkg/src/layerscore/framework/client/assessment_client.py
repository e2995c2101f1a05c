# src/layerscore/framework/client/assessment_client.py

from pathlib import Path
from typing import Dict, Optional, Tuple, Union

from layerscore.core.config import Settings
from layerscore.core.exceptions import DocumentIOError, DocumentShapeError, Violation
from layerscore.core.utils.logger import get_logger
from layerscore.framework.internal.engine import evaluate, gap_report, sensitivities
from layerscore.framework.internal.engine import sensitivity as leaf_sensitivity
from layerscore.framework.internal.formatters import (
    RenderOptions,
    render_chart_data,
    render_gap_report,
    render_result,
    render_sensitivities,
    render_validation,
)
from layerscore.framework.internal.ingest import (
    export_schema,
    parse_schema,
    parse_scores,
)
from layerscore.framework.internal.misa import BUILTIN_MISA_REF, misa_framework
from layerscore.framework.internal.validation import bind_assessment, validate_schema
from layerscore.framework.types import (
    Assessment,
    EvaluationResult,
    FrameworkSchema,
    GapReport,
    RawScoresDoc,
)

logger = get_logger(__name__)

PathLike = Union[str, Path]

_SCORES_FORMATS = {".csv": "csv", ".json": "json"}


def _read_text(path: PathLike) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        logger.debug("Cannot read %s: %s", path, e)
        raise DocumentIOError(str(path), str(e)) from e


class AssessmentClient:
    """Main interface for loading, evaluating and reporting assessments."""

    def __init__(
        self,
        settings: Optional[Settings] = None,
        options: Optional[RenderOptions] = None,
    ):
        self.settings = settings or Settings()
        self.options = options or RenderOptions(
            format=self.settings.report.format,
            precision=self.settings.report.precision,
        )

    def load_schema(self, ref: str = BUILTIN_MISA_REF) -> FrameworkSchema:
        """
        Resolve a schema reference and validate the schema it names.

        Args:
            ref: ``builtin:misa`` or the path of a JSON schema document.

        Returns:
            The validated schema.

        Raises:
            DocumentIOError: If the file cannot be read or the built-in name
                is unknown.
            DocumentError: If the document is malformed.
            SchemaValidationError: If the schema breaks a structural rule.
        """
        if ref == BUILTIN_MISA_REF:
            return misa_framework()
        if ref.startswith("builtin:"):
            raise DocumentIOError(ref, f"no built-in schema named '{ref[8:]}'")
        raw = parse_schema(_read_text(ref), source=str(ref))
        schema = validate_schema(raw)
        logger.info("Loaded schema '%s' from %s", schema.name, ref)
        return schema

    def load_scores(self, path: PathLike, name: Optional[str] = None) -> RawScoresDoc:
        """
        Parse a scores file; the format follows the file suffix.

        CSV files carry no assessment name, so the file stem is used unless
        ``name`` is given.
        """
        path = Path(path)
        format = _SCORES_FORMATS.get(path.suffix.lower())
        if format is None:
            raise DocumentShapeError(
                [
                    Violation(
                        "E_SHAPE",
                        str(path),
                        "scores files must end in .csv or .json",
                    )
                ]
            )
        return parse_scores(
            _read_text(path), format, source=str(path), name=name or path.stem
        )

    def bind(self, schema: FrameworkSchema, path: PathLike) -> Assessment:
        """Load a scores file and bind it to ``schema``."""
        return bind_assessment(schema, self.load_scores(path))

    def assess(
        self, schema: FrameworkSchema, path: PathLike
    ) -> Tuple[Assessment, EvaluationResult]:
        assessment = self.bind(schema, path)
        result = evaluate(schema, assessment)
        logger.info(
            "Assessed '%s': overall %r of %r",
            assessment.name,
            result.overall,
            schema.scale,
        )
        return assessment, result

    def gaps(self, schema: FrameworkSchema, path: PathLike) -> GapReport:
        _, result = self.assess(schema, path)
        return gap_report(result, schema)

    def sensitivities(
        self, schema: FrameworkSchema, leaf_id: Optional[str] = None
    ) -> Dict[str, float]:
        """Sensitivity of every leaf, or of ``leaf_id`` alone."""
        if leaf_id is not None:
            return {leaf_id: leaf_sensitivity(schema, leaf_id)}
        return sensitivities(schema)

    # Rendering

    def render_result(self, result: EvaluationResult, schema: FrameworkSchema) -> str:
        return render_result(result, schema, self.options)

    def render_chart(self, gaps: GapReport) -> str:
        return render_chart_data(gaps, self.options)

    def render_gaps(self, gaps: GapReport) -> str:
        return render_gap_report(gaps, self.options)

    def render_sensitivities(
        self, values: Dict[str, float], schema: FrameworkSchema
    ) -> str:
        return render_sensitivities(values, schema, self.options)

    def render_validation(
        self, schema: FrameworkSchema, assessment: Optional[Assessment] = None
    ) -> str:
        return render_validation(schema, assessment, self.options)

    @staticmethod
    def export_schema(schema: FrameworkSchema) -> str:
        return export_schema(schema)
