"""Exception hierarchy for the superalg package."""


class SuperalgError(Exception):
    """Base class for all errors raised by this package."""


class DimensionMismatch(SuperalgError):
    pass


class InvariantViolation(SuperalgError):
    """A structural invariant of a value is violated (bad table, bad basis...)."""

    def __init__(self, which, detail=""):
        self.which = which
        super().__init__(f"{which}: {detail}" if detail else which)


class ParseError(SuperalgError):
    """Malformed or non-canonical serialized document."""

    def __init__(self, reason, line=None):
        self.line = line
        self.reason = reason
        super().__init__(f"line {line}: {reason}" if line is not None else reason)


class ParityPatternViolation(SuperalgError):
    pass


class DegenerateForm(SuperalgError):
    pass


class NotADerivation(SuperalgError):
    pass


class NotInvertible(SuperalgError):
    pass


class NotAssociative(SuperalgError):
    pass


class NotSupercommutative(SuperalgError):
    pass


class WrongParity(SuperalgError):
    pass


class ConditionViolated(SuperalgError):
    """A displayed precondition of a construction fails exactly."""

    def __init__(self, name, detail=""):
        self.name = name
        super().__init__(f"{name}: {detail}" if detail else name)


class NotCoboundary(SuperalgError):
    pass


class ZeroLambda(SuperalgError):
    pass


class IrrationalSpectrum(SuperalgError):
    """A needed eigenvalue does not exist over the rationals."""


class ZeroEigenvalue(SuperalgError):
    pass


class EmptyCenter(SuperalgError):
    pass


class EmptyBase(SuperalgError):
    """Inverse procedure invoked on an excluded minimal algebra."""


class UnsupportedParities(SuperalgError):
    pass


class StabilityViolated(SuperalgError):
    pass


class EmptyCenterInFactors(SuperalgError):
    pass


class UnknownEntry(SuperalgError):
    pass


class BadParams(SuperalgError):
    pass
