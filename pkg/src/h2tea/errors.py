"""Exception taxonomy shared across the package.

The CLI maps these onto exit codes: ConfigError -> 2 (user/config problem),
UndefinedMetricError -> 3 (a metric has no defined value for the given
inputs), anything else -> 1 (internal failure).
"""


class H2TeaError(Exception):
    """Base class for all package errors."""


class ConfigError(H2TeaError, ValueError):
    """Malformed or invalid scenario input; the message names the offending key."""


class UndefinedMetricError(H2TeaError, ValueError):
    """The requested metric is undefined for these inputs (e.g. IRR with no sign change)."""


class BracketError(UndefinedMetricError):
    """A root solver found no sign change over its search interval."""


class ConvergenceError(H2TeaError, RuntimeError):
    """A solver exhausted its iteration budget; the message reports the last bracket."""
