from .exceptions import (
    AssessmentBindingError,
    ConfigurationError,
    DocumentError,
    DocumentIOError,
    DocumentParseError,
    DocumentShapeError,
    DuplicateKeyError,
    LayerscoreError,
    NonNumericScoreError,
    NotLeafError,
    SchemaValidationError,
    UnknownControlError,
    UnknownNodeError,
    Violation,
)

__all__ = [
    "AssessmentBindingError",
    "ConfigurationError",
    "DocumentError",
    "DocumentIOError",
    "DocumentParseError",
    "DocumentShapeError",
    "DuplicateKeyError",
    "LayerscoreError",
    "NonNumericScoreError",
    "NotLeafError",
    "SchemaValidationError",
    "UnknownControlError",
    "UnknownNodeError",
    "Violation",
]
