"""Exception types shared across the package."""


class ScholarGraphError(Exception):
    """Base class for all package-specific errors."""


class UnknownEntityError(ScholarGraphError):
    """Raised when an entity iri does not resolve in the graph."""


class UnknownPredicateError(ScholarGraphError):
    """Raised when parsed data names a predicate outside the ontology."""


class TurtleSyntaxError(ScholarGraphError):
    """Malformed Turtle input; carries the offending position."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class OverlappingMentionsError(ScholarGraphError):
    """Two concept mentions claim the same token."""


class BioFormatError(ScholarGraphError):
    """A BIO label sequence violates the encoding scheme."""


class DistributionError(ScholarGraphError):
    """A probability vector fails validation (sum, support, or shape)."""


class PayloadTypeError(ScholarGraphError):
    """A dataflow payload does not match the declared port type."""


class PipelineFormatError(ScholarGraphError):
    """A pipeline document is structurally malformed."""


class PipelineValidationError(ScholarGraphError):
    """A pipeline failed validation; carries the violation list."""

    def __init__(self, violations):
        self.violations = list(violations)
        summary = "; ".join(v.message for v in self.violations)
        super().__init__(f"pipeline validation failed: {summary}")
