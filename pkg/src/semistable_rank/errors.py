class InputError(ValueError):
    """Malformed or inconsistent input (unknown vertex, bad file, composite p...)."""


class HypothesisError(ArithmeticError):
    """A mathematical hypothesis required by a computation does not hold."""


class ConsistencyError(RuntimeError):
    """An internal self-check failed. Always a bug, never a user error."""
