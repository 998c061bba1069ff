"""Exception types shared across the package."""


class PreconditionError(ValueError):
    """An operation was called outside its stated preconditions."""


class InvariantViolation(RuntimeError):
    """A verified mathematical property failed.

    Distinct from a usage error: this signals that a checked identity or
    bound did not hold on the given instance, which is a finding, not a
    malformed call.
    """
