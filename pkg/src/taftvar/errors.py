"""Exception hierarchy shared by all taftvar modules."""


class TaftVarError(Exception):
    """Base class for all errors raised by this package."""


class NonPrimeModulus(TaftVarError):
    pass


class NoRootOfUnity(TaftVarError):
    pass


class CharDividesEll(TaftVarError):
    pass


class ContextMismatch(TaftVarError):
    pass


class ZeroPoint(TaftVarError):
    pass


class OutOfRange(TaftVarError):
    pass


class RelationViolation(TaftVarError):
    pass


class ZeroCocycle(TaftVarError):
    pass


class NormalizationFailure(TaftVarError):
    pass


class ResourceBudgetExceeded(TaftVarError):
    pass


class SpecValidation(TaftVarError):
    pass


class RecipeParse(TaftVarError):
    pass
