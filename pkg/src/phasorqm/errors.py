"""Exception hierarchy for phasorqm."""


class PhasorError(Exception):
    """Base class for all errors raised by this package."""


class ZeroNorm(PhasorError, ValueError):
    pass


class IncommensurateWave(PhasorError, ValueError):
    pass


class BadQuantumNumber(PhasorError, ValueError):
    pass


class UnstableTimestep(PhasorError, ValueError):
    """dt exceeds the explicit-scheme stability bound."""

    def __init__(self, dt, limit, message=None):
        self.dt = dt
        self.limit = limit
        super().__init__(
            message or f"dt={dt:.6g} exceeds allowed step {limit:.6g} (stability_limit)"
        )


class NonFinite(PhasorError, ArithmeticError):
    """A propagated field acquired a NaN or infinite entry."""

    def __init__(self, step_index, message=None):
        self.step_index = step_index
        super().__init__(message or f"non-finite field entry at step {step_index}")


class NonUniformSampling(PhasorError, ValueError):
    pass


class TooFewSamples(PhasorError, ValueError):
    pass


class RimSpeedExceeded(PhasorError, ValueError):
    pass


class ParseError(PhasorError, ValueError):
    def __init__(self, line_number, message):
        self.line_number = line_number
        super().__init__(f"line {line_number}: {message}")


class ValidationError(PhasorError, ValueError):
    def __init__(self, field, message):
        self.field = field
        super().__init__(f"{field}: {message}")
