# tests/unit/core/exceptions/test_exceptions.py

import pytest
from pydantic import BaseModel, ValidationError

from layerscore.core.exceptions import (
    AssessmentBindingError,
    ConfigurationError,
    DocumentIOError,
    DocumentParseError,
    DocumentShapeError,
    LayerscoreError,
    NonNumericScoreError,
    Violation,
)


class _Model(BaseModel):
    name: str
    inner: dict


def test_violation_line_format():
    violation = Violation("E_MISSING_SCORE", "4", "leaf has no score")

    assert str(violation) == "E_MISSING_SCORE 4: leaf has no score"


def test_error_lines_one_per_violation():
    error = AssessmentBindingError(
        [
            Violation("E_MISSING_SCORE", "4", "leaf has no score"),
            Violation("E_RANGE", "3", "score 101 outside [0, 100]"),
        ]
    )

    assert error.lines() == [
        "E_MISSING_SCORE 4: leaf has no score",
        "E_RANGE 3: score 101 outside [0, 100]",
    ]
    assert error.codes == ["E_MISSING_SCORE", "E_RANGE"]
    assert error.exit_code == 1


def test_error_without_violations_falls_back_to_message():
    error = LayerscoreError("boom", code="E_X", path="a.json")

    assert str(error) == "boom (path='a.json')"
    assert error.lines() == ["E_X boom (path='a.json')"]


@pytest.mark.parametrize(
    "error",
    [
        DocumentParseError("Expecting value", 2, 5, source="a.json"),
        DocumentIOError("a.csv", "No such file"),
        NonNumericScoreError("abc", row=3),
        ConfigurationError("bad"),
    ],
)
def test_document_and_config_errors_exit_with_two(error):
    assert error.exit_code == 2


def test_parse_error_subject_carries_position():
    error = DocumentParseError("Expecting value", 2, 5, source="a.json")

    assert error.lines() == ["E_PARSE a.json:2:5: Expecting value"]


def test_shape_error_from_pydantic_lists_every_field():
    with pytest.raises(ValidationError) as exc_info:
        _Model.model_validate({"inner": 3})

    error = DocumentShapeError.from_validation(exc_info.value)

    assert sorted(error.fields) == ["inner", "name"]
    assert set(error.codes) == {"E_SHAPE"}
