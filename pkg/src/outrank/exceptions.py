"""Exception hierarchy for the outrank package."""


class OutrankError(Exception):
    """Base class for every error raised by this package."""


class InvalidInputError(OutrankError, ValueError):
    """An argument violates a documented precondition."""


class NotFoundError(OutrankError, KeyError):
    """A referenced alternative or criterion id does not exist."""


class ConfigurationError(OutrankError, ValueError):
    """Criteria weights or settings are inconsistent."""


class SchemaError(OutrankError, ValueError):
    """A dataset is missing required columns."""


class RowValueError(OutrankError, ValueError):
    """A dataset cell is malformed or violates a field invariant."""

    def __init__(self, message, *, row=None, column=None):
        prefix = ""
        if row is not None:
            prefix = f"row {row}"
            if column is not None:
                prefix += f", column {column!r}"
            prefix += ": "
        elif column is not None:
            prefix = f"column {column!r}: "
        super().__init__(prefix + message)
        self.row = row
        self.column = column


class DuplicatePlayerError(OutrankError, ValueError):
    """Two box-score rows share the same player id."""


class DegenerateDataError(OutrankError, ValueError):
    """A statistic is undefined for the given data (e.g. zero variance)."""


class RequestError(OutrankError, ValueError):
    """A ranking request failed validation.

    ``code`` is a stable machine-readable identifier, also used by the HTTP
    API error payloads.
    """

    def __init__(self, code, message):
        super().__init__(message)
        self.code = code
