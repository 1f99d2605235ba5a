"""Exception and warning types shared across the package."""


class ArrayQEDError(Exception):
    """Base class for all package-specific errors."""


class ConfigError(ArrayQEDError):
    """Invalid or incomplete configuration input."""


class UnitError(ConfigError):
    """Unit conversion failure: unknown unit, family mismatch, or missing reference scale."""


class DomainError(ArrayQEDError, ValueError):
    """An operation was called outside its mathematical domain."""


class NumericError(ArrayQEDError):
    """A numerical routine failed to meet its accuracy contract."""


class IntegrationError(NumericError):
    """Time integration did not converge; carries solver diagnostics in the message."""


class MissingCorrelatorError(ArrayQEDError, KeyError):
    """A field-correlator assembly was attempted without a required atomic moment."""

    def __init__(self, name: str):
        super().__init__(name)
        self.name = name

    def __str__(self) -> str:
        return f"atomic moment {self.name!r} is required but was not provided"


class StrongDriveError(ArrayQEDError):
    """A weak-field closed form was requested above saturation S = 1."""


class WeakFieldWarning(UserWarning):
    """Saturation is above the weak-field threshold; closed forms degrade as O(S)."""


class NoBlockadeWarning(UserWarning):
    """Vanishing interaction coefficient: no blockade radius exists."""


class SubwavelengthWarning(UserWarning):
    """Lattice constant is not below the wavelength; several diffraction orders propagate."""
