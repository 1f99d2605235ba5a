"""Per-channel linear optics of the driven array.

Each transverse photon mode k behaves as a 1D scattering channel with a
two-level amplitude reflectivity

    r_k = -Gamma_k / (Gamma_k + gamma_sc + 2i (Delta_k - delta_p)),

an on-resonance magnitude r_res = Gamma_k / (Gamma_k + gamma_sc), and --
once the coupling field dresses the array -- a collective Rydberg mode of
shift omega_k and width gamma_k given by

    i omega_k + gamma_k / 2 = -(2 |Omega_c|^2 / Gamma_k) r_k,

which modifies reflection to

    rt_k = r_k * delta / (delta - omega_k + i gamma_k / 2),

with delta = delta_p + delta_c the bare two-photon detuning.  Near the
single-photon resonance gamma_k approaches the transparency width
gamma0 = 4 |Omega_c|^2 / Gamma_k.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, StrongDriveError, WeakFieldWarning

__all__ = [
    "ChannelParams",
    "EITConfig",
    "DerivedChannel",
    "ResonanceCurves",
    "two_level_reflectivity",
    "rydberg_mode_params",
    "eit_reflectivity",
    "derive_channel",
    "identical_channels",
    "effective_drive",
    "saturation",
    "saturation_from_field",
    "resonance_curves",
    "scattering_loss_estimate",
    "check_weak_field",
    "WEAK_SATURATION",
    "STRONG_SATURATION",
]

#: saturations at or below this are "weak": closed forms hold to O(S)
WEAK_SATURATION = 1e-2
#: above this the weak-field closed forms are refused outright
STRONG_SATURATION = 1.0


@dataclass(frozen=True)
class ChannelParams:
    """Linear scattering constants of one transverse channel."""

    label: str
    gamma_k: float
    delta_k: float
    gamma_sc: float = 0.0
    k_vec: tuple[float, float] | None = None

    def __post_init__(self):
        if self.gamma_k <= 0:
            raise DomainError("gamma_k must be positive")
        if self.gamma_sc < 0:
            raise DomainError("gamma_sc must be nonnegative")

    @property
    def r_res(self) -> float:
        """On-resonance reflectivity magnitude Gamma/(Gamma + gamma_sc)."""
        return self.gamma_k / (self.gamma_k + self.gamma_sc)


@dataclass(frozen=True)
class EITConfig:
    """Coupling-field Rabi frequency and the two detunings."""

    omega_c: complex
    delta_p: float
    delta_c: float

    @property
    def delta(self) -> float:
        """Two-photon detuning delta = delta_p + delta_c."""
        return self.delta_p + self.delta_c


@dataclass(frozen=True)
class DerivedChannel:
    """Immutable snapshot of all derived linear-optics quantities of a channel."""

    label: str
    r: complex
    r_tilde: complex
    omega_k: float
    gamma_ryd: float
    gamma0: float
    r_res: float
    params: ChannelParams
    eit: EITConfig

    @property
    def contrast(self) -> complex:
        """r - rt, the EIT modification of the reflected amplitude."""
        return self.r - self.r_tilde


def two_level_reflectivity(ch: ChannelParams, delta_p: float) -> complex:
    """Amplitude reflectivity of the bare (two-level) array at probe detuning delta_p.

    At delta_p = Delta_k this is -r_res; with gamma_sc = 0 it reaches the
    perfect-reflection value -1.
    """
    return -ch.gamma_k / (ch.gamma_k + ch.gamma_sc + 2j * (ch.delta_k - delta_p))


def rydberg_mode_params(ch: ChannelParams, eit: EITConfig) -> tuple[float, float]:
    """Collective Rydberg-mode shift and width (omega_k, gamma_ryd).

    Equivalent closed form: gamma/2 + i omega =
    |Omega_c|^2 / ((Gamma + gamma_sc)/2 + i (Delta - delta_p)).
    """
    if eit.omega_c == 0:
        return (0.0, 0.0)
    zeta = abs(eit.omega_c) ** 2 / (
        (ch.gamma_k + ch.gamma_sc) / 2.0 + 1j * (ch.delta_k - eit.delta_p)
    )
    return (float(zeta.imag), float(2.0 * zeta.real))


def eit_reflectivity(ch: ChannelParams, eit: EITConfig) -> complex:
    """Reflectivity with the coupling field on.

    Exactly zero on bare two-photon resonance (delta = 0, full transparency)
    and tends to the two-level r_k as |delta| grows.  With Omega_c = 0 the
    Rydberg mode decouples and the two-level value is returned.
    """
    r = two_level_reflectivity(ch, eit.delta_p)
    if eit.omega_c == 0:
        return r
    delta = eit.delta
    if delta == 0:
        return 0.0 + 0.0j
    omega_k, gamma_ryd = rydberg_mode_params(ch, eit)
    return r * delta / (delta - omega_k + 1j * gamma_ryd / 2.0)


def derive_channel(ch: ChannelParams, eit: EITConfig) -> DerivedChannel:
    """Bundle every derived quantity of a channel into one snapshot."""
    omega_k, gamma_ryd = rydberg_mode_params(ch, eit)
    return DerivedChannel(
        label=ch.label,
        r=two_level_reflectivity(ch, eit.delta_p),
        r_tilde=eit_reflectivity(ch, eit),
        omega_k=omega_k,
        gamma_ryd=gamma_ryd,
        gamma0=4.0 * abs(eit.omega_c) ** 2 / ch.gamma_k,
        r_res=ch.r_res,
        params=ch,
        eit=eit,
    )


def identical_channels(ch: ChannelParams, labels) -> list[ChannelParams]:
    """Clone one channel's constants under several labels (identical-parameter shortcut)."""
    return [
        ChannelParams(
            label=lab,
            gamma_k=ch.gamma_k,
            delta_k=ch.delta_k,
            gamma_sc=ch.gamma_sc,
            k_vec=ch.k_vec,
        )
        for lab in labels
    ]


def effective_drive(
    ch: ChannelParams,
    eit: EITConfig,
    e_p: complex,
    n_atoms: int,
    dipole_d: complex = 1.0,
) -> complex:
    """Coherent drive of the collective Rydberg mode by input amplitude e_p.

    Omega_k = -r_k (2 Omega_c / Gamma_k) sqrt(N) d* e_p  (hbar = 1).  Only
    the mean coherent part is represented; vacuum-noise contributions to
    normal-ordered observables are already contained in the closed forms.
    """
    if n_atoms < 1:
        raise DomainError("n_atoms must be >= 1")
    r = two_level_reflectivity(ch, eit.delta_p)
    return -r * (2.0 * eit.omega_c / ch.gamma_k) * math.sqrt(n_atoms) * np.conj(dipole_d) * e_p


def saturation(ch: ChannelParams, eit: EITConfig, omega_drive: complex) -> float:
    """Saturation parameter S = 2 |Omega_k|^2 / ((omega_k - delta)^2 + (gamma_k/2)^2).

    S << 1 gates every weak-field closed form in this package.
    """
    omega_k, gamma_ryd = rydberg_mode_params(ch, eit)
    denom = (omega_k - eit.delta) ** 2 + (gamma_ryd / 2.0) ** 2
    if denom == 0.0:
        raise DomainError(
            "saturation undefined: Omega_c = 0 together with delta = 0 leaves "
            "the collective mode without a resonance denominator"
        )
    return 2.0 * abs(omega_drive) ** 2 / denom


def saturation_from_field(
    ch: ChannelParams,
    eit: EITConfig,
    e_p: complex,
    n_atoms: int,
    dipole_d: complex = 1.0,
) -> float:
    """Saturation from the input field: S = 2 N |e_p d / Omega_c|^2 |1 - rt/r|^2.

    Algebraically identical to `saturation` evaluated on `effective_drive`;
    kept as an independent expression for cross-checking.
    """
    if eit.omega_c == 0:
        raise DomainError("saturation_from_field needs Omega_c != 0")
    r = two_level_reflectivity(ch, eit.delta_p)
    rt = eit_reflectivity(ch, eit)
    return (
        2.0
        * n_atoms
        * abs(e_p * dipole_d / eit.omega_c) ** 2
        * abs(1.0 - rt / r) ** 2
    )


@dataclass(frozen=True)
class ResonanceCurves:
    """The two delta(delta_p) loci organizing the correlation maps.

    ``full_absorption`` is the hyperbola delta = |Omega_c|^2 / (delta_p - Delta)
    on which the EIT reflectivity is purely real and maximal, rt = -r_res
    (complete absorption).  ``collective_resonance`` is the dressed two-photon
    resonance delta = omega_k(delta_p) of the collective Rydberg mode, where
    inter-channel quantum correlations peak.
    """

    params: ChannelParams
    omega_c: complex

    def full_absorption(self, delta_p: float) -> float:
        """Hyperbola value; +/-inf marks the single-photon resonance delta_p = Delta."""
        offset = delta_p - self.params.delta_k
        if offset == 0.0:
            return math.inf
        return abs(self.omega_c) ** 2 / offset

    def collective_resonance(self, delta_p: float) -> float:
        """delta = omega_k(delta_p) = -(gamma0/2) Im r_k."""
        eit = EITConfig(omega_c=self.omega_c, delta_p=delta_p, delta_c=0.0)
        omega_k, _ = rydberg_mode_params(self.params, eit)
        return omega_k


def resonance_curves(ch: ChannelParams, omega_c: complex) -> ResonanceCurves:
    if omega_c == 0:
        raise DomainError("resonance curves need Omega_c != 0")
    return ResonanceCurves(params=ch, omega_c=omega_c)


def scattering_loss_estimate(eta: float, gamma_k: float, prefactor: float = 1.0) -> float:
    """Convenience scaling gamma_sc ~ eta^2 Gamma_k for positional disorder.

    The proportionality constant is not pinned by the model; it defaults to
    one and the helper is never used in quantitative checks.
    """
    return prefactor * eta**2 * gamma_k


def check_weak_field(s: float, context: str = "closed form") -> None:
    """Enforce the weak-field policy: warn above 1e-2, refuse above 1."""
    if s > STRONG_SATURATION:
        raise StrongDriveError(
            f"{context}: saturation S = {s:.3g} exceeds 1; use the master-equation "
            "route instead of the weak-field expression"
        )
    if s > WEAK_SATURATION:
        warnings.warn(
            f"{context}: saturation S = {s:.3g} is above the weak-field threshold "
            f"{WEAK_SATURATION:g}; expect O(S) deviations",
            WeakFieldWarning,
            stacklevel=3,
        )
