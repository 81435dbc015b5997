"""Exception types shared across the package."""


class DimensionError(ValueError):
    """Raised when matrix or vector shapes are incompatible with an operation."""


class InvalidInputError(ValueError):
    """Raised when an input violates a mathematical precondition.

    Examples: non-Hermitian matrix passed to a Hermitian-only routine,
    non-projector passed to a projector-only routine, negative time,
    NaN entries.
    """


class ConfigError(ValueError):
    """Raised when a scenario configuration document is malformed.

    Carries a location hint (line/column for JSON syntax errors, a field
    path for structural problems).
    """
