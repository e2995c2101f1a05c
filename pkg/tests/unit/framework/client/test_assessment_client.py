# tests/unit/framework/client/test_assessment_client.py

import pytest

from layerscore.core.config import Settings
from layerscore.core.exceptions import (
    DocumentIOError,
    DocumentShapeError,
    SchemaValidationError,
)
from layerscore.framework.client.assessment_client import AssessmentClient
from layerscore.framework.internal.formatters import RenderOptions, ReportFormat
from layerscore.framework.internal.misa import misa_framework
from layerscore.framework.types import Layer
from tests.resources.tree_utils import DATA_DIR, REFERENCE_OVERALL


@pytest.fixture
def client():
    return AssessmentClient()


def test_options_default_to_settings():
    settings = Settings()
    settings.report.format = "json"
    settings.report.precision = 3

    client = AssessmentClient(settings=settings)

    assert client.options.format is ReportFormat.JSON
    assert client.options.precision == 3


def test_explicit_options_win():
    client = AssessmentClient(options=RenderOptions(format="csv", precision=0))

    assert client.options.format is ReportFormat.CSV


def test_builtin_schema_reference(client):
    assert client.load_schema("builtin:misa") is misa_framework()


def test_unknown_builtin_reference(client):
    with pytest.raises(DocumentIOError) as exc_info:
        client.load_schema("builtin:iso27001")

    assert exc_info.value.exit_code == 2


def test_missing_schema_file(client, tmp_path):
    with pytest.raises(DocumentIOError) as exc_info:
        client.load_schema(str(tmp_path / "absent.json"))

    assert exc_info.value.code == "E_IO"


def test_schema_file_is_validated(client, tmp_path):
    path = tmp_path / "schema.json"
    path.write_text(
        '{"name": "x", "scale": 10, "layers": {"culture": '
        '[{"id": "1", "title": "One", "children": []}]}}',
        encoding="utf-8",
    )

    with pytest.raises(SchemaValidationError) as exc_info:
        client.load_schema(str(path))

    assert exc_info.value.codes.count("E_MISSING_LAYER") == 5


@pytest.mark.parametrize("name", ["reference.csv", "reference.json"])
def test_assess_either_format(client, name):
    schema = client.load_schema()

    assessment, result = client.assess(schema, DATA_DIR / name)

    assert assessment.name == "reference"
    assert result.overall == pytest.approx(REFERENCE_OVERALL, abs=1e-9)


def test_scores_suffix_must_be_known(client, tmp_path):
    path = tmp_path / "scores.txt"
    path.write_text("node_id,score\n", encoding="utf-8")

    with pytest.raises(DocumentShapeError):
        client.load_scores(path)


def test_nested_schema_from_file(client):
    schema = client.load_schema(str(DATA_DIR / "sections.json"))

    gaps = client.gaps(schema, DATA_DIR / "sections.csv")

    assert gaps.weakest is Layer.CULTURE
    assert client.sensitivities(schema, "1.2") == {"1.2": 1 / 36}
    assert len(client.sensitivities(schema)) == 11
