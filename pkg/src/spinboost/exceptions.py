"""Exception types raised by spinboost."""


class DomainError(ValueError):
    """Input lies outside the physical domain (super-luminal speed, off-shell
    momentum, non-unit direction, invalid density matrix, ...)."""


class ConfigurationError(ValueError):
    """Numerical setup is unusable (grid too small, too few curve points)."""


class DegenerateAxisError(DomainError):
    """Rotation axis is undefined because the rotation angle vanishes."""


__all__ = ["DomainError", "ConfigurationError", "DegenerateAxisError"]
