"""Exception types shared across the package."""


class QRacahError(Exception):
    """Base class for all errors raised by this package."""


class InvalidParams(QRacahError, ValueError):
    """Parameter tuple violates a domain constraint; the message names it."""


class NonTerminatingSeries(QRacahError, ValueError):
    """A hypergeometric series spec has no terminating upper parameter."""


class ZeroLowerParameter(QRacahError, ZeroDivisionError):
    """A lower-parameter Pochhammer vanishes within the terminating range."""


class BalanceViolation(QRacahError, ValueError):
    """Parameters fail the exact balance condition required by a transformation."""


class SelectionRuleViolation(QRacahError, ValueError):
    """Angular momenta violate a Clebsch-Gordan selection rule."""


class ResourceLimit(QRacahError, ValueError):
    """A brute-force oracle was asked to exceed its feasibility cap."""


class NegativeMass(QRacahError, ValueError):
    """A pmf value is negative, so no sampler can be built at this q."""


class EmptySample(QRacahError, ValueError):
    """An empirical summary was requested for zero draws."""


class DenominatorZero(QRacahError, ZeroDivisionError):
    """A printed coefficient denominator vanishes at this parameter point."""


class InternalMismatch(QRacahError):
    """Two formulas for the same quantity disagreed; signals a library bug."""
