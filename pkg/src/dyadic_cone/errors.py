"""Typed failures raised by the library.

The CLI reports these by class name, so the names are part of the output format.
"""


class DyadicConeError(Exception):
    """Base class for every domain error."""


class BadRange(DyadicConeError, ValueError):
    pass


class EvenDenominator(DyadicConeError, ValueError):
    """The rational is not a dyadic integer (its reduced denominator is even)."""


class EvenResidue(DyadicConeError, ValueError):
    pass


class OddM(DyadicConeError, ValueError):
    """No dyadic root exists for odd order m."""


class NotARoot(DyadicConeError, ValueError):
    pass


class BadModulus(DyadicConeError, ValueError):
    pass
