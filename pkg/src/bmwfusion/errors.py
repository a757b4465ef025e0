"""Error types shared across the package.

Every error carries a stable ``code`` string so that the CLI can map
failures onto exit codes and JSON reports without parsing messages.
"""


class BmwError(Exception):
    """Base class for all package errors."""

    code = "INTERNAL"


class NotGeneric(BmwError):
    """Parameter values violate the genericity checklist."""

    code = "NOT_GENERIC"

    def __init__(self, constraint, message=None):
        self.constraint = constraint
        super().__init__(message or "parameters not generic: %s" % constraint)


class DivisionByZero(BmwError):
    code = "DIVISION_BY_ZERO"


class PoleError(BmwError):
    """A rational-function coefficient is undefined at the given point."""

    code = "POLE"


class PoleAtEvaluation(PoleError):
    code = "POLE_AT_EVALUATION"


class NonInvertible(BmwError):
    code = "NONINVERTIBLE"


class NegativeValuation(BmwError):
    """A truncated Laurent series has a genuine pole in h."""

    code = "NEGATIVE_VALUATION"


class RewriteLimit(BmwError):
    """The normal-form rewrite step cap was exceeded."""

    code = "REWRITE_LIMIT"


class DimensionMismatch(BmwError):
    """Canonical word enumeration did not close at the expected dimension."""

    code = "DIMENSION_MISMATCH"


class CapExceeded(BmwError):
    code = "CAP_EXCEEDED"


class DomainMismatch(BmwError):
    code = "DOMAIN_MISMATCH"
