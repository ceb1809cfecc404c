"""Exception hierarchy.

Malformed input (bad tables, indices out of range) is kept separate from
mathematical failure, which is reported through :class:`~rsemi.report.Report`
objects or raised as :class:`VerificationError` when a construction's own
guarantee is broken.
"""


class RsemiError(Exception):
    pass


class MalformedInputError(RsemiError, ValueError):
    """Structurally invalid input: out-of-range index, non-total table, ..."""


class ParseError(MalformedInputError):
    pass


class NotASemilatticeError(MalformedInputError):
    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


class RejectedInputError(RsemiError, ValueError):
    """Input is well formed but fails a mathematical precondition."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class CannotReverseError(RejectedInputError):
    pass


class MissingDomainTopError(RejectedInputError):
    pass


class GenerationError(RejectedInputError):
    pass


class InsufficientBoundError(RsemiError):
    """The word/ideal bound is too small for the requested verification."""


class VerificationError(RsemiError, AssertionError):
    """A statement that must hold for the construction failed."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report
