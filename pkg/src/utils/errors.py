"""Exception hierarchy shared by every package module."""


class JonesBenchError(Exception):
    exit_code = 1


class ValidationError(JonesBenchError):
    exit_code = 2


class NumericalError(JonesBenchError):
    exit_code = 3


class MalformedRecord(ValidationError):
    pass


class BadEdgeMultiplicity(ValidationError):
    pass


class MultiComponent(ValidationError):
    pass


class NonPlanarCode(ValidationError):
    pass


class EdgesNotCoFacial(ValidationError):
    pass


class TooManyCrossings(ValidationError):
    pass


class TooLarge(ValidationError):
    pass


class ZeroT(ValidationError):
    pass


class EvenFactor(ValidationError):
    pass


class NotDiagonal(ValidationError):
    pass


class NotCompiled(ValidationError):
    pass


class MissingPart(ValidationError):
    pass


class UnknownKnot(ValidationError):
    pass


class ConfigError(ValidationError):
    pass


class SingularPrefactor(NumericalError):
    pass


class SingularConfusion(NumericalError):
    pass


class NonConvergent(NumericalError):
    pass
