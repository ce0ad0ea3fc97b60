class ModmatError(Exception):
    def __init__(self, message: str):
        super().__init__(message)
        self.message = message


class ConfigError(ModmatError):
    pass


# exact arithmetic


class FieldMismatch(ModmatError):
    pass


class DivisionByNonUnit(ModmatError):
    pass


class ExpOfUnit(ModmatError):
    pass


class NoSolution(ModmatError):
    pass


class DimensionMismatch(ModmatError):
    pass


# configurations


class LabelOutOfRange(ModmatError):
    pass


class SizeMismatch(ModmatError):
    pass


class DegenerateFrame(ModmatError):
    pass


class ExcludedParameter(ModmatError):
    pass


class NoFrame(ModmatError):
    pass


class NotEquivalent(ModmatError):
    pass


class ZeroPoint(ModmatError):
    pass


# point chain and cubic


class DegenerateIntersection(ModmatError):
    pass


class DenominatorVanishes(ModmatError):
    pass


class PoleOfParametrization(ModmatError):
    pass


class NotOnCurve(ModmatError):
    pass


class SingularInput(ModmatError):
    pass


class NonFlexNeutral(ModmatError):
    pass


# cusps


class NotAUnit(ModmatError):
    pass


class LevelTooSmall(ModmatError):
    pass


class ZeroIndex(ModmatError):
    pass


class InvalidCuspLabel(ModmatError):
    pass


class DegenerateLevel(ModmatError):
    pass


class NoReduction(ModmatError):
    pass


# q-expansions


class IndexDivisibleByN(ModmatError):
    pass


class IndexConstraintViolated(ModmatError):
    pass


class NonconvergentInput(ModmatError):
    pass


# modular realization matrix


class DenominatorNotUnit(ModmatError):
    pass


class FrameMismatch(ModmatError):
    pass


class NoSolutionAtPrecision(ModmatError):
    pass
