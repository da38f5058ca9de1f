"""Shared exception types, mapped onto CLI exit codes."""


class VortexOamError(Exception):
    """Base class for package errors."""

    exit_code = 1


class DomainError(VortexOamError):
    """Arguments outside the mathematical domain (bad quantum numbers, |x|>1, ...)."""

    exit_code = 1


class SingularKernelError(DomainError):
    """Coulomb kernel evaluated on (or too close to) the coincidence set."""

    exit_code = 1


class ConfigError(VortexOamError):
    """Malformed or inconsistent run configuration / CLI usage."""

    exit_code = 2


class NonConvergedError(VortexOamError):
    """Adaptive quadrature could not meet the requested tolerance."""

    exit_code = 3
