"""Exception hierarchy shared across the package."""

from __future__ import annotations


class TetraspeedError(Exception):
    """Base class for every error raised by this package."""


class DomainError(TetraspeedError, ValueError):
    """An argument lies outside the domain of an operation."""


class UndefinedValuationError(DomainError):
    """The p-adic valuation of zero is infinite."""


class LTEPreconditionError(DomainError):
    """A hypothesis of the lifting-the-exponent identity does not hold."""

    def __init__(self, condition: str):
        super().__init__(f"lifting-the-exponent precondition violated: {condition}")
        self.condition = condition


class InvalidBaseError(DomainError):
    """Tetration base is 0, 1, or a multiple of 10."""


class UnsupportedModulusError(DomainError):
    """Modulus has a prime factor other than 2 or 5."""


class ClassNotCoveredError(DomainError):
    """Base residue class is not one of the classes with a known power relation."""


class ComputationError(TetraspeedError):
    """A computation could not finish within its configured resources."""


class TowerOverflowError(ComputationError):
    """An exact tower value exceeds the configured digit cap."""


class PrecisionExhaustedError(ComputationError):
    """Agreement depth still saturated at the hard precision cap."""


class NotStabilizedError(ComputationError):
    """Congruence speed did not settle before the height cap."""


class FixtureError(TetraspeedError):
    """Problem reading, parsing or locating OEIS reference data."""


class BFileParseError(FixtureError):
    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class FixtureMissingError(FixtureError):
    pass


class ManifestMismatchError(FixtureError):
    pass


class NoGeneratorError(FixtureError):
    pass


class FetchError(FixtureError):
    pass
