"""Typed errors shared across the package.

Errors that correspond to a verdict a caller may want to branch on carry a
stable machine-readable ``code``; the CLI prints that code verbatim.
Structural problems with inputs (bad shapes, broken invariants) are plain
``ValueError`` subclasses.
"""


class DomainError(Exception):
    """Base class for errors with a stable machine-readable code."""

    code = "DOMAIN_ERROR"

    def __init__(self, message: str = ""):
        super().__init__(message or self.code)


class OutOfRangeError(DomainError):
    code = "OUT_OF_RANGE"


class ParityUnsupportedError(DomainError):
    code = "PARITY_UNSUPPORTED"


class NotApplicableError(DomainError):
    code = "NOT_APPLICABLE"


class NotOrientableError(DomainError):
    code = "NOT_ORIENTABLE_OR_DISCONNECTED"


class NonInjectiveSubcomplexError(DomainError):
    code = "NON_INJECTIVE_SUBCOMPLEX"


class InvalidComplexError(ValueError):
    """A chain complex violates its construction invariants."""


class InvalidChainMapError(ValueError):
    """A chain map fails to commute with boundaries or has bad shapes."""


class ChainFormatError(ValueError):
    """A chain-complex or chain-map file cannot be parsed."""
