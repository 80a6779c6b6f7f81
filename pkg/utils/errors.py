"""
Exception hierarchy for the MNSD type classifier
"""


class ClassifierError(Exception):
    """Base class for every error raised by the classifier."""


class InvalidInputError(ClassifierError, ValueError):
    """A dimension, type or integer argument violates an operation's precondition."""


class TypeParseError(InvalidInputError):
    """A type string could not be parsed."""

    def __init__(self, message: str, token: str = ""):
        super().__init__(message)
        self.token = token


class ConfigurationError(ClassifierError):
    """Unknown filter id, bad configuration key/value, or missing recursion handle."""


class ReferenceNotFoundError(ClassifierError, LookupError):
    """No reference list is shipped for the requested dimension."""


class NotSupportedError(ClassifierError):
    """The oracle has no independent formulation for the requested filter."""


class FixtureIntegrityError(ClassifierError):
    """The shipped reference fixture does not match its recorded checksum."""


class ReportStoreError(ClassifierError):
    """Persisting or loading reports from the database failed."""
