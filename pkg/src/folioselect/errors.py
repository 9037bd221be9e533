"""Exception hierarchy shared by the engine, the CLI and the service."""

from __future__ import annotations


class FolioError(Exception):
    """Base class for every error raised by this package."""


class InvalidInputError(FolioError):
    """An operation received a value outside its accepted domain."""


class NotFoundError(FolioError):
    """A referenced entity (project, objective, alternative) does not exist."""


class ValidationError(FolioError):
    """A workspace or alternative failed invariant validation.

    Carries the list of :class:`~folioselect.model.Violation` records that
    caused the rejection.
    """

    def __init__(self, message: str, violations=()):
        super().__init__(message)
        self.violations = list(violations)


class DocumentError(FolioError):
    """A persisted document or CSV file could not be parsed."""


class SchemaVersionError(DocumentError):
    """A document declares a schema version this build cannot read."""

    def __init__(self, found, expected):
        super().__init__(f"unsupported schema_version {found!r}, expected {expected!r}")
        self.found = found
        self.expected = expected


class EnumerationCapError(FolioError):
    """Exhaustive enumeration was refused because 2^n would exceed the cap."""

    def __init__(self, requested: int, cap: int):
        super().__init__(
            f"refusing to enumerate {requested} candidates: cap is {cap} "
            f"(pass a higher cap explicitly to override)"
        )
        self.requested = requested
        self.cap = cap


class StaleRevisionError(FolioError):
    """A write carried a revision older than the current session state."""

    def __init__(self, sent, current):
        super().__init__(f"stale revision {sent}, current is {current}")
        self.sent = sent
        self.current = current
