class CapExceeded(ValueError):
    """Raised when a request would enumerate or search more than the configured cap allows."""
