"""Van der Waals blockade: potential, blockade radius, pair-amplitude suppression.

Atoms sharing a Rydberg excitation interact through V(r) = C6 / r^6.  Two
excitations within the blockade radius

    R_b = (C6 / |gamma + 2i (omega - delta)|)^(1/6)

are energetically excluded; at the collective two-photon resonance
(delta = omega) this reduces to R_b = (C6 / gamma)^(1/6).  The steady-state
pair amplitude of two driven atoms carries the suppression factor

    c2_nm / (c1_n c1_m) = 1 / (1 + i V(r_nm) / (2 (gamma/2 + i (omega - delta)))),

which drops to zero as V grows; a beam waist below R_b therefore confines
the dynamics to at most one excitation.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, NoBlockadeWarning

__all__ = [
    "VdwSpec",
    "BlockadeReport",
    "vdw_potential",
    "blockade_radius",
    "pairwise_vdw_matrix",
    "suppression_factor",
    "two_excitation_amplitudes",
    "blockade_validity",
]


@dataclass(frozen=True)
class VdwSpec:
    """Interaction coefficient C6 (rate * length^6, hbar = 1) and beam waist."""

    c6: float
    beam_waist: float

    def __post_init__(self):
        if self.c6 < 0:
            raise DomainError("c6 must be nonnegative")
        if self.beam_waist <= 0:
            raise DomainError("beam_waist must be positive")


def vdw_potential(spec: VdwSpec, r: float) -> float:
    """V(r) = C6 / r^6, expressed as a rate (hbar = 1)."""
    if r <= 0:
        raise DomainError("vdw_potential needs r > 0")
    return spec.c6 / r**6


def blockade_radius(
    spec: VdwSpec,
    gamma_ryd: float,
    omega_k: float = 0.0,
    delta: float = 0.0,
) -> float:
    """Distance at which V(R_b) = |gamma + 2i (omega - delta)|.

    With delta = omega this is the resonant radius (C6 / gamma)^(1/6).
    C6 = 0 returns 0 under a NoBlockadeWarning.
    """
    scale = abs(gamma_ryd + 2j * (omega_k - delta))
    if scale == 0.0:
        raise DomainError("blockade radius undefined: gamma = 0 and omega = delta")
    if spec.c6 == 0.0:
        warnings.warn(
            "C6 = 0: no blockade radius exists", NoBlockadeWarning, stacklevel=2
        )
        return 0.0
    return float((spec.c6 / scale) ** (1.0 / 6.0))


def pairwise_vdw_matrix(c6: float, positions) -> np.ndarray:
    """Symmetric V(r_nm) matrix with zero diagonal for an arbitrary position set."""
    pos = np.asarray(positions, dtype=float)
    if pos.ndim != 2 or pos.shape[1] != 2:
        raise DomainError("positions must be an (N, 2) array")
    diff = pos[:, None, :] - pos[None, :, :]
    dist = np.linalg.norm(diff, axis=-1)
    n = len(pos)
    v = np.zeros((n, n))
    off = ~np.eye(n, dtype=bool)
    if np.any(dist[off] == 0.0):
        raise DomainError("coincident atom positions")
    v[off] = c6 / dist[off] ** 6
    return v


def suppression_factor(vdw, gamma: float, omega: float, delta: float) -> np.ndarray:
    """Pair-amplitude suppression 1 / (1 + i V / (2 (gamma/2 + i (omega - delta)))).

    Accepts scalar or array V, including +inf entries (fully blockaded pairs).
    """
    den = gamma / 2.0 + 1j * (omega - delta)
    if den == 0:
        raise DomainError("singular denominator: gamma = 0 and omega = delta")
    v = np.asarray(vdw, dtype=float)
    out = np.zeros(np.broadcast(v, v).shape, dtype=complex)
    finite = np.isfinite(v)
    out[finite] = 1.0 / (1.0 + 1j * v[finite] / (2.0 * den))
    # infinite V: amplitude fully suppressed
    return out if out.shape else complex(out)


def two_excitation_amplitudes(
    drive_profile,
    gamma: float,
    omega: float,
    delta: float,
    vdw,
) -> tuple[float, np.ndarray, np.ndarray]:
    """Lowest-order steady-state amplitudes (c0, c1, c2) of N driven atoms.

    c0 = 1, c1_n = -Omega(r_n) / (gamma/2 + i (omega - delta)), and the
    symmetric pair matrix c2_nm = c1_n c1_m * suppression(V_nm) with zero
    diagonal.  Valid for weak drive |Omega| << gamma (caller-asserted).
    """
    drive = np.asarray(drive_profile, dtype=complex)
    v = np.asarray(vdw, dtype=float)
    n = len(drive)
    if v.shape != (n, n):
        raise DomainError("vdw matrix shape must match the drive profile")
    den = gamma / 2.0 + 1j * (omega - delta)
    if den == 0:
        raise DomainError("singular denominator: gamma = 0 and omega = delta")
    c1 = -drive / den
    c2 = np.outer(c1, c1) * suppression_factor(v, gamma, omega, delta)
    np.fill_diagonal(c2, 0.0)
    return 1.0, c1, c2


@dataclass(frozen=True)
class BlockadeReport:
    """Outcome of the waist-inside-blockade-radius check."""

    radius: float
    waist: float
    ratio: float
    worst_pair_suppression: float
    valid: bool


def blockade_validity(
    spec: VdwSpec,
    gamma_ryd: float,
    omega_k: float = 0.0,
    delta: float = 0.0,
    positions=None,
) -> BlockadeReport:
    """Check the single-excitation condition waist < R_b.

    The worst-pair suppression is |c2/(c1 c1)| at the largest separation of
    driven atoms: the maximal pairwise distance of `positions` entries inside
    the waist when given, otherwise the waist diameter.
    """
    radius = blockade_radius(spec, gamma_ryd, omega_k, delta)
    if radius == 0.0:
        return BlockadeReport(
            radius=0.0,
            waist=spec.beam_waist,
            ratio=np.inf,
            worst_pair_suppression=1.0,
            valid=False,
        )
    if positions is not None:
        pos = np.asarray(positions, dtype=float)
        inside = pos[np.linalg.norm(pos, axis=1) <= spec.beam_waist]
        if len(inside) >= 2:
            diff = inside[:, None, :] - inside[None, :, :]
            d_max = float(np.linalg.norm(diff, axis=-1).max())
        else:
            d_max = 0.0
    else:
        d_max = 2.0 * spec.beam_waist
    if d_max > 0:
        v_worst = spec.c6 / d_max**6
        supp = abs(suppression_factor(v_worst, gamma_ryd, omega_k, delta))
    else:
        supp = 0.0
    ratio = spec.beam_waist / radius
    return BlockadeReport(
        radius=radius,
        waist=spec.beam_waist,
        ratio=ratio,
        worst_pair_suppression=float(supp),
        valid=bool(ratio < 1.0),
    )
