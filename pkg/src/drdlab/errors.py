"""Exception types shared across the package."""


class DigraphError(ValueError):
    """Invalid digraph construction or malformed edge-list input."""

    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


class NotStronglyConnected(ValueError):
    def __init__(self, u, v):
        super().__init__(f"digraph is not strongly connected: ({u}, {v}) unreachable")
        self.pair = (u, v)


class PreconditionError(ValueError):
    """An operation was called on an input outside its domain."""


class ConsistencyError(RuntimeError):
    """A structural fact guaranteed by theory failed to hold on a computed object."""
