class ConsistencyError(RuntimeError):
    """Two independent computations of the same quantity disagreed."""
