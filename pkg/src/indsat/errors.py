"""Exception types shared across the package."""


class ResourceLimitError(RuntimeError):
    """Raised when an operation would exceed a hard enumeration cap."""
