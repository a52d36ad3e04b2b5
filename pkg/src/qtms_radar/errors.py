"""Exception hierarchy shared by all model layers.

``DomainError`` covers physically invalid inputs (negative power, zero
frequency, ...). ``UndetectableError`` is raised when a correlation radar can
never cross its detection threshold, so that sweeps fail loudly instead of
reporting a bogus zero range. ``SolverError`` marks a numerical failure that
must not be silently passed off as a result.
"""


class QtmsRadarError(Exception):
    """Base class for all package errors."""


class DomainError(QtmsRadarError, ValueError):
    """An input lies outside the physically meaningful domain."""


class DegenerateDataError(DomainError):
    """A sample batch is unusable (zero variance, too few samples)."""


class UndetectableError(QtmsRadarError, ValueError):
    """The source correlation never exceeds the detection threshold.

    No maximum range exists for such a system; callers that sweep over
    configurations should catch this and record the condition explicitly.
    """


class SolverError(QtmsRadarError, RuntimeError):
    """A root solve failed to converge to the required residual."""


class ConfigError(QtmsRadarError, ValueError):
    """A scenario file or sweep request is malformed."""


class ScenarioParseError(ConfigError):
    """Syntax error in a scenario file; carries line/column position."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", column {column}" if column is not None else "") + ")"
        super().__init__(message + where)


class ScenarioValidationError(ConfigError):
    """A scenario violates the schema; carries the offending field name."""

    def __init__(self, field, message):
        self.field = field
        super().__init__(f"{field}: {message}")
