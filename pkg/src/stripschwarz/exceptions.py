"""Exception hierarchy shared by all modules."""


class StripSchwarzError(Exception):
    """Base class for every error raised by the package."""


class InvalidParameterError(StripSchwarzError, ValueError):
    """A construction parameter is outside its admissible range."""


class DomainError(StripSchwarzError, ValueError):
    """An evaluation point lies outside the domain of a map or metric."""


class CodomainError(StripSchwarzError, ValueError):
    """A generated map leaves its declared codomain on the check grid."""


class CompositionError(StripSchwarzError, ValueError):
    """The codomain of the inner map does not fit the outer map's domain."""


class GeneratorStarvationError(StripSchwarzError, RuntimeError):
    """Rejection sampling discarded too many candidate maps."""
