"""Exception types raised by the mesoscope library."""


class MesoscopeError(Exception):
    """Base class for all library errors."""


class NonPositiveInput(MesoscopeError, ValueError):
    """A physical quantity that must be strictly positive was not."""


class InvalidConfig(MesoscopeError, ValueError):
    """Configuration validation failed.

    Carries the complete list of violations, one ``(field, rule)`` pair per
    entry, not just the first problem found.
    """

    def __init__(self, violations):
        self.violations = list(violations)
        lines = "; ".join(f"{field}: {rule}" for field, rule in self.violations)
        super().__init__(f"invalid configuration: {lines}")


class DeltaNotPointwise(MesoscopeError, TypeError):
    """Point-mass densities have no pointwise value; integrate them analytically."""


class EmptyInterval(MesoscopeError, ValueError):
    """Truncation interval has non-positive length."""


class GeometryViolation(MesoscopeError, ValueError):
    """Mirror placed at or above the slit plane."""


class NoRootInBracket(MesoscopeError, ValueError):
    """Root finder could not bracket the requested target value."""


class QuadratureNotConverged(MesoscopeError, RuntimeError):
    """Interval-doubling quadrature exhausted its budget before converging."""

    def __init__(self, intervals, last_change, tolerance):
        self.intervals = intervals
        self.last_change = last_change
        self.tolerance = tolerance
        super().__init__(
            f"quadrature did not converge: {intervals} intervals, "
            f"last change {last_change:.3e} > tolerance {tolerance:.3e}"
        )


class DegeneratePattern(MesoscopeError, ValueError):
    """Intensity pattern is constant; node metrics are undefined."""


class LogDomain(MesoscopeError, ValueError):
    """Logarithm argument fell outside its domain."""


class CollapsedDomainError(MesoscopeError, ValueError):
    """Collapsed (folded-coefficient) mode evaluated off its reference design point.

    The folded coefficients bake in the reference vanadium mirror, rubidium
    gas and probe wavelength; they are meaningless for other parameters, so
    the request is rejected rather than silently mis-scaled.
    """


class ParseError(MesoscopeError, ValueError):
    """Config file could not be parsed; carries the offending line number."""

    def __init__(self, line_no, reason):
        self.line_no = line_no
        self.reason = reason
        super().__init__(f"line {line_no}: {reason}")
