"""Exception types shared across the package."""


class CherednikError(Exception):
    """Base class for all errors raised by this package."""


class NonPrime(CherednikError, ValueError):
    pass


class ReducibleModulus(CherednikError, ValueError):
    pass


class OrderNotDividing(CherednikError, ValueError):
    """No element of the requested order exists in the current field.

    The caller should enlarge the extension degree, see
    :func:`cherednik.gf.min_extension_degree`.
    """


class CtxMismatch(CherednikError, ValueError):
    pass


class ParseError(CherednikError, ValueError):
    pass


class BadParameters(CherednikError, ValueError):
    pass


class SizeMismatch(CherednikError, ValueError):
    pass


class BadCharacteristic(CherednikError, ValueError):
    pass


class BudgetExceeded(CherednikError, RuntimeError):
    pass


class InternalError(CherednikError, RuntimeError):
    """A mathematical contract was violated by a computed result."""


class IdentityViolated(CherednikError, AssertionError):
    def __init__(self, name, witness=None):
        super().__init__(f"identity {name!r} violated")
        self.name = name
        self.witness = witness


class NotCentral(CherednikError, ValueError):
    pass


class NotSingleEigenvalue(CherednikError, RuntimeError):
    pass


class SplitFailure(CherednikError, RuntimeError):
    pass


class RadicalCheckFailed(CherednikError, RuntimeError):
    pass
