# src/layerscore/core/exceptions/exceptions.py

"""
Error hierarchy shared by every layerscore module.

Each error carries a short ``code`` and one or more ``Violation`` records.
Validation is total, so a single error may describe many problems at once;
the CLI prints one line per violation and maps ``exit_code`` to its status.
"""

from dataclasses import dataclass
from typing import Any, Iterable, List, Optional, Sequence, Tuple

from pydantic import ValidationError


@dataclass(frozen=True)
class Violation:
    """A single problem found in a schema, assessment or document."""

    code: str
    subject: str
    message: str

    def __str__(self) -> str:
        return f"{self.code} {self.subject}: {self.message}"


class LayerscoreError(Exception):
    """Base exception for all layerscore errors."""

    exit_code = 1

    def __init__(
        self,
        message: str,
        code: Optional[str] = None,
        violations: Optional[Iterable[Violation]] = None,
        **context: Any,
    ):
        """
        Initialize the LayerscoreError.

        Args:
            message (str): Description of the error.
            code (Optional[str]): Error code for categorization.
            violations (Optional[Iterable[Violation]]): Individual problems.
            **context: Additional context rendered after the message.
        """
        self.message = message
        self.code = code
        self.violations: Tuple[Violation, ...] = tuple(violations or ())
        self.context = context
        super().__init__(message)

    def __str__(self) -> str:
        context_str = ", ".join(
            f"{key}='{value}'" for key, value in self.context.items()
        )
        return f"{self.message} ({context_str})" if context_str else self.message

    @property
    def codes(self) -> List[str]:
        """Codes of all violations, in report order."""
        return [violation.code for violation in self.violations]

    def lines(self) -> List[str]:
        """One diagnostic line per violation, falling back to the message."""
        if self.violations:
            return [str(violation) for violation in self.violations]
        return [f"{self.code or 'ERROR'} {self}"]


# Schema and assessment validation (exit status 1)


class SchemaValidationError(LayerscoreError):
    """Raised when a framework schema violates one or more structural rules."""

    def __init__(self, violations: Sequence[Violation]):
        super().__init__(
            f"Schema is invalid: {len(violations)} violation(s)",
            code="E_SCHEMA",
            violations=violations,
        )


class AssessmentBindingError(LayerscoreError):
    """Raised when scores cannot be bound to a schema."""

    def __init__(self, violations: Sequence[Violation]):
        super().__init__(
            f"Assessment is invalid: {len(violations)} violation(s)",
            code="E_ASSESSMENT",
            violations=violations,
        )


class UnknownControlError(LayerscoreError):
    """Raised when a MISA control number is outside 1..8."""

    def __init__(self, control_number: int):
        self.control_number = control_number
        super().__init__(
            f"Unknown MISA control {control_number}",
            code="E_UNKNOWN_CONTROL",
            violations=[
                Violation(
                    "E_UNKNOWN_CONTROL",
                    str(control_number),
                    "MISA control numbers run from 1 to 8",
                )
            ],
        )


class UnknownNodeError(LayerscoreError):
    """Raised when a node id does not exist in the schema."""

    def __init__(self, node_id: str):
        self.node_id = node_id
        super().__init__(
            f"Unknown node '{node_id}'",
            code="E_UNKNOWN_NODE",
            violations=[
                Violation("E_UNKNOWN_NODE", node_id, "no such node in the schema")
            ],
        )


class NotLeafError(LayerscoreError):
    """Raised when a leaf is required but an internal node was given."""

    def __init__(self, node_id: str):
        self.node_id = node_id
        super().__init__(
            f"Node '{node_id}' is not a leaf",
            code="E_NOT_LEAF",
            violations=[
                Violation("E_NOT_LEAF", node_id, "node has children; only leaves score")
            ],
        )


# Documents, I/O and configuration (exit status 2)


class DocumentError(LayerscoreError):
    """Base exception for document parsing and I/O failures."""

    exit_code = 2


class DocumentParseError(DocumentError):
    """Raised when a document is not syntactically well formed."""

    def __init__(self, detail: str, line: int, column: int, source: str = "<text>"):
        self.line = line
        self.column = column
        super().__init__(
            f"Malformed document: {detail}",
            code="E_PARSE",
            violations=[
                Violation("E_PARSE", f"{source}:{line}:{column}", detail)
            ],
        )


class DocumentShapeError(DocumentError):
    """Raised when a parsed document misses fields or has wrong types."""

    def __init__(self, violations: Sequence[Violation]):
        super().__init__(
            f"Document has the wrong shape: {len(violations)} problem(s)",
            code="E_SHAPE",
            violations=violations,
        )

    @property
    def fields(self) -> List[str]:
        """Dotted paths of every offending field."""
        return [violation.subject for violation in self.violations]

    @classmethod
    def from_validation(cls, error: ValidationError) -> "DocumentShapeError":
        return cls(_violations_from_pydantic("E_SHAPE", error))


class DuplicateKeyError(DocumentError):
    """Raised when a scores document lists the same node id twice."""

    def __init__(self, node_id: str, row: Optional[int] = None):
        self.node_id = node_id
        self.row = row
        where = f" (row {row})" if row is not None else ""
        super().__init__(
            f"Duplicate node id '{node_id}'{where}",
            code="E_DUP_KEY",
            violations=[
                Violation("E_DUP_KEY", node_id, f"node id listed more than once{where}")
            ],
        )


class NonNumericScoreError(DocumentError):
    """Raised when a score is not a plain decimal number."""

    def __init__(self, value: Any, row: Optional[int] = None, node_id: str = ""):
        self.value = value
        self.row = row
        subject = f"row {row}" if row is not None else node_id
        super().__init__(
            f"Score {value!r} is not a plain decimal number",
            code="E_NAN",
            violations=[
                Violation(
                    "E_NAN", subject, f"score {value!r} is not a plain decimal number"
                )
            ],
        )


class DocumentIOError(DocumentError):
    """Raised when a document cannot be read or written."""

    def __init__(self, path: str, detail: str):
        self.path = path
        super().__init__(
            f"Cannot access '{path}': {detail}",
            code="E_IO",
            violations=[Violation("E_IO", path, detail)],
        )


class ConfigurationError(LayerscoreError):
    """Raised when the configuration file is missing, malformed or invalid."""

    exit_code = 2

    def __init__(
        self,
        message: str,
        source: str = "config",
        violations: Optional[Iterable[Violation]] = None,
    ):
        violations = list(violations or [Violation("E_CONFIG", source, message)])
        super().__init__(message, code="E_CONFIG", violations=violations)

    @classmethod
    def from_validation(
        cls, error: ValidationError, source: str = "config"
    ) -> "ConfigurationError":
        return cls(
            "Configuration validation failed.",
            source=source,
            violations=_violations_from_pydantic("E_CONFIG", error),
        )


def _violations_from_pydantic(code: str, error: ValidationError) -> List[Violation]:
    violations = []
    for item in error.errors():
        path = ".".join(str(part) for part in item["loc"]) or "<root>"
        violations.append(Violation(code, path, item["msg"]))
    return violations
