"""Shared exception types.

Guard violations (object caps, state caps) and internal consistency
failures get distinct types so callers (and the command line) can map
them to distinct exit codes instead of pattern-matching messages.
"""


class CapExceeded(RuntimeError):
    """A configurable workload guard refused to start a computation."""


class ConsistencyError(RuntimeError):
    """An internal invariant failed; results must not be trusted or repaired."""
