"""Exception hierarchy shared by every module.

The CLI maps these onto exit codes: input problems exit 2, degenerate
geometry exits 3, exhausted resampling exits 4.
"""

from __future__ import annotations


class ScrollInterpError(Exception):
    """Base class for all library errors."""


class FieldMismatchError(ScrollInterpError, TypeError):
    """Scalars from different fields were combined."""


class PreconditionError(ScrollInterpError, ValueError):
    """An operation was called outside its documented domain."""


class DegenerateError(ScrollInterpError):
    """Input geometry fails a general-position requirement.

    ``ledger`` lists the predicates that were checked, as (name, passed) pairs.
    """

    def __init__(self, message: str, ledger=None):
        super().__init__(message)
        self.ledger = list(ledger or [])


class RetryExhausted(ScrollInterpError):
    """A sampling site failed every one of its retries."""

    def __init__(self, site: str, attempts: int, last_error: Exception | None = None):
        msg = f"{site}: no admissible sample after {attempts} attempts"
        if last_error is not None:
            msg += f" (last failure: {last_error})"
        super().__init__(msg)
        self.site = site
        self.attempts = attempts
        self.last_error = last_error
