class AinfError(Exception):
    pass


class InvalidCategory(AinfError, ValueError):
    pass


class NotComposable(InvalidCategory):
    pass


class DegreeRuleViolation(InvalidCategory):
    pass


class DuplicateGenerator(InvalidCategory):
    pass


class UnknownObject(InvalidCategory):
    pass


class UnknownGenerator(InvalidCategory):
    pass


class SideMismatch(AinfError, ValueError):
    pass


class MissingUnit(AinfError, ValueError):
    pass


class InvalidSpace(AinfError, ValueError):
    pass


class UnknownSignTag(AinfError, ValueError):
    pass


class DimensionMismatch(AinfError, ValueError):
    pass


class NotAComplex(AinfError):

    def __init__(self, degree, message=None):
        self.degree = degree
        if message is None:
            message = 'd∘d does not vanish at degree %d' % degree
        super().__init__(message)


class Unsolvable(AinfError):
    pass


class RationalOnly(AinfError):
    pass


class NoSolution(Unsolvable):
    pass


class NoIntegralSolution(RationalOnly):
    pass


class NotACycle(AinfError, ValueError):
    pass


class _WitnessError(AinfError):

    def __init__(self, message, witness=None, residual=None):
        super().__init__(message)
        self.witness = witness
        self.residual = residual


class MaurerCartanViolation(_WitnessError):
    pass


class ClosednessViolation(_WitnessError):
    pass


class ChainMapViolation(_WitnessError):
    pass


class SchemaError(AinfError, ValueError):
    """
    Invalid category file. *path* is a JSON path like ``$.mu.2[0][1]``, or a
    ``line:column`` position for syntax errors.
    """

    def __init__(self, path, message):
        super().__init__('%s: %s' % (path, message))
        self.path = path
        self.message = message
