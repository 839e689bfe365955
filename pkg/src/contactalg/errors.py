"""Exception types shared across the package."""


class MismatchError(ValueError):
    """Elements or maps from different algebras were mixed."""


class ValidationError(ValueError):
    """An input violates a documented precondition or domain restriction."""


class InternalInconsistencyError(RuntimeError):
    """Two formulations that are provably equivalent disagreed.

    Raised instead of silently picking a side; it always indicates a bug
    in this package, never bad user input.
    """
