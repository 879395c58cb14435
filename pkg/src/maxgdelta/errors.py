"""Exception types shared across the package."""


class MaxGdeltaError(Exception):
    """Base class for all package errors."""


class InputError(MaxGdeltaError):
    """An operation received arguments outside its contract."""


class VariantError(InputError):
    """An element of the wrong variant was passed (e.g. star on a starred element)."""


class PosetError(InputError):
    """A relation failed partial-order validation; carries the violation report."""

    def __init__(self, message, violations=()):
        super().__init__(message)
        self.violations = list(violations)


class IndeterminateError(MaxGdeltaError):
    """The available truncation or budget is too small to decide the query."""


class ParseError(MaxGdeltaError):
    """Bad element/sequence syntax; ``position`` is the byte offset of the fault."""

    def __init__(self, message, position):
        super().__init__(f"at offset {position}: {message}")
        self.position = position
        self.reason = message
