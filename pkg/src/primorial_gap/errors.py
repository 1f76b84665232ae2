"""Error taxonomy shared across the package.

Every guard raises one of these four types so callers (and the CLI exit-code
mapping) can tell bad inputs apart from blown resource budgets and from
numerical escalation failures.
"""


class DomainError(ValueError):
    """Input outside the mathematical domain of the operation."""


class ResourceLimitError(RuntimeError):
    """Request exceeds a configured size, time, or memory policy cap."""


class PrecisionError(RuntimeError):
    """Certified evaluation could not separate two quantities after escalation."""


class NoRootError(RuntimeError):
    """Root bracketing failed within the allowed search range."""
