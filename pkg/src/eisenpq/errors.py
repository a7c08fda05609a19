"""Exception hierarchy shared by every module of the package."""


class EisenpqError(Exception):
    """Base class for all package errors."""


class DegenerateInput(EisenpqError, ValueError):
    pass


class NotCoprime(EisenpqError, ValueError):
    pass


class InvalidLevel(EisenpqError, ValueError):
    pass


class NotProjectivePoint(EisenpqError, ValueError):
    pass


class NotAUnit(EisenpqError, ValueError):
    pass


class NotConjugable(EisenpqError, ValueError):
    pass


class NotInSubgroup(EisenpqError, ValueError):
    pass


class DegenerateTrace(EisenpqError, ValueError):
    pass


class NotACusp(EisenpqError, ValueError):
    pass


class LevelMismatch(EisenpqError, ValueError):
    pass


class NotInstantiable(EisenpqError):
    """The explicit exceptional matrices do not exist for this input.

    ``gcd`` holds the offending gcd and ``which`` names the failed
    condition (``"gamma1"`` or ``"gamma2"``).
    """

    def __init__(self, message, *, gcd=None, which=None):
        super().__init__(message)
        self.gcd = gcd
        self.which = which


class PrecisionFailure(EisenpqError, ArithmeticError):
    """A numerical routine could not certify the requested accuracy."""

    def __init__(self, message, *, error_bound=None):
        super().__init__(message)
        self.error_bound = error_bound
