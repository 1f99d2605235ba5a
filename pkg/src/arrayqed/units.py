"""Unit tags and exact-ratio conversions.

Two unit families are supported:

* rates -- ``"MHz"`` (ordinary frequency, i.e. angular rate / 2pi),
  ``"Gamma"`` (units of the collective linewidth) and ``"gamma0"``
  (units of the EIT transparency width 4|Omega_c|^2 / Gamma);
* lengths -- ``"m"``, ``"um"``, ``"nm"``, ``"a"`` (lattice constants)
  and ``"lambda"`` (probe wavelengths).

All internal physics runs in a single consistent rate unit (the figure
presets use Gamma = 1); conversions happen only at I/O boundaries.
Conversions are exact ratios, so round trips are identities up to one
floating-point rounding.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import UnitError

RATE_UNITS = ("MHz", "Gamma", "gamma0")
LENGTH_UNITS = ("m", "um", "nm", "a", "lambda")

_LENGTH_TO_UM = {"m": 1e6, "um": 1.0, "nm": 1e-3}


@dataclass(frozen=True)
class ReferenceScales:
    """Reference scales needed by normalized units.

    ``gamma_collective_mhz`` is Gamma/2pi in MHz, ``eit_width_mhz`` is
    gamma0/2pi in MHz; the lengths are in micrometers.  Any entry may be
    omitted when the corresponding unit is not used.
    """

    gamma_collective_mhz: float | None = None
    eit_width_mhz: float | None = None
    lattice_constant_um: float | None = None
    wavelength_um: float | None = None


@dataclass(frozen=True)
class Quantity:
    value: float | complex
    unit: str

    def __post_init__(self):
        if self.unit not in RATE_UNITS and self.unit not in LENGTH_UNITS:
            raise UnitError(f"unknown unit {self.unit!r}")

    @property
    def family(self) -> str:
        return "rate" if self.unit in RATE_UNITS else "length"


def _rate_factor_mhz(unit: str, scales: ReferenceScales | None) -> float:
    """MHz per one `unit`."""
    if unit == "MHz":
        return 1.0
    if scales is None:
        raise UnitError(f"conversion involving {unit!r} needs reference scales")
    if unit == "Gamma":
        if scales.gamma_collective_mhz is None:
            raise UnitError("conversion to/from 'Gamma' needs the collective linewidth scale")
        return scales.gamma_collective_mhz
    if scales.eit_width_mhz is None:
        raise UnitError("conversion to/from 'gamma0' needs the EIT width scale")
    return scales.eit_width_mhz


def _length_factor_um(unit: str, scales: ReferenceScales | None) -> float:
    """Micrometers per one `unit`."""
    if unit in _LENGTH_TO_UM:
        return _LENGTH_TO_UM[unit]
    if scales is None:
        raise UnitError(f"conversion involving {unit!r} needs reference scales")
    if unit == "a":
        if scales.lattice_constant_um is None:
            raise UnitError("conversion to/from 'a' needs the lattice constant scale")
        return scales.lattice_constant_um
    if scales.wavelength_um is None:
        raise UnitError("conversion to/from 'lambda' needs the wavelength scale")
    return scales.wavelength_um


def convert(q: Quantity, target: str, scales: ReferenceScales | None = None) -> Quantity:
    """Convert `q` to the `target` unit by an exact ratio of reference factors."""
    if target not in RATE_UNITS and target not in LENGTH_UNITS:
        raise UnitError(f"unknown unit {target!r}")
    target_family = "rate" if target in RATE_UNITS else "length"
    if q.family != target_family:
        raise UnitError(
            f"cannot convert {q.unit!r} ({q.family}) to {target!r} ({target_family}): "
            "incompatible unit families"
        )
    if q.unit == target:
        return q
    if q.family == "rate":
        factor = _rate_factor_mhz(q.unit, scales) / _rate_factor_mhz(target, scales)
    else:
        factor = _length_factor_um(q.unit, scales) / _length_factor_um(target, scales)
    return Quantity(q.value * factor, target)


def parse_quantity(text: str) -> Quantity:
    """Parse a ``"<value> <unit>"`` string, e.g. ``"532 nm"`` or ``"0.05 Gamma"``."""
    parts = text.split()
    if len(parts) != 2:
        raise UnitError(f"expected '<value> <unit>', got {text!r}")
    try:
        value = float(parts[0])
    except ValueError as exc:
        raise UnitError(f"bad numeric value in {text!r}") from exc
    return Quantity(value, parts[1])
