"""Collective decay rates and cooperative shifts of a 2D square atom array.

Photon-mediated dipole-dipole couplings between the atoms are summed over
the lattice to produce, for each in-plane wavevector k, the collective
emission rate Gamma_k and the cooperative shift Delta_k of the spin-wave
mode (1/sqrt(N)) sum_n exp(i k.r_n) |n>.  The rates follow from the
free-space dyadic Green's tensor through

    Gamma_k/2 + i Delta_k
        = -i (3/2) gamma_atom lambda_p
          * (1/N) sum_{n,m} e_d* . G(r_n - r_m) . e_d  exp(-i k.(r_n - r_m)),

where the diagonal (n = m) term contributes only its imaginary part
Im G(0) = k_p/(6 pi) (the divergent real part renormalizes the bare
transition frequency and is dropped).  The double sum is evaluated over
displacement classes, which is exact and O(N) cheap; it equals the k-mode
expectation value of the coupling matrix on the finite array and converges
to the infinite-lattice value as n_side grows.  See docs/model_notes.md
for the normalization conventions.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, SubwavelengthWarning

__all__ = [
    "LatticeSpec",
    "CollectiveRates",
    "free_space_green",
    "green_self_im",
    "collective_rates",
    "gamma_k0_closed_form",
]


@dataclass(frozen=True)
class LatticeSpec:
    """Square n_side x n_side array in the z = 0 plane.

    Lengths (`a`, `lambda_p`) must share one unit; `gamma_atom` sets the
    rate unit of every derived rate.  The dipole orientation `e_d` must be
    a unit vector lying in the array plane (in-plane polarization).
    """

    a: float
    n_side: int
    lambda_p: float
    gamma_atom: float
    e_d: tuple[float, float, float] = (1.0, 0.0, 0.0)

    def __post_init__(self):
        if self.a <= 0 or self.lambda_p <= 0 or self.gamma_atom <= 0:
            raise DomainError("a, lambda_p and gamma_atom must be positive")
        if self.n_side < 1:
            raise DomainError("n_side must be >= 1")
        e = np.asarray(self.e_d, dtype=complex)
        if e.shape != (3,):
            raise DomainError("e_d must be a 3-vector")
        if abs(np.vdot(e, e).real - 1.0) > 1e-12:
            raise DomainError("e_d must be a unit vector (|e_d| = 1 within 1e-12)")
        if abs(e[2]) > 1e-12:
            raise DomainError("e_d must lie in the array plane (zero z component)")
        if self.a >= self.lambda_p:
            warnings.warn(
                "lattice constant is not below the wavelength: more than one "
                "diffraction order propagates and the single-order reflectivity "
                "picture degrades",
                SubwavelengthWarning,
                stacklevel=2,
            )

    @property
    def n_atoms(self) -> int:
        return self.n_side**2

    @property
    def positions(self) -> np.ndarray:
        """(N, 2) site coordinates, centered on the array midpoint."""
        idx = np.arange(self.n_side) - (self.n_side - 1) / 2.0
        gx, gy = np.meshgrid(idx * self.a, idx * self.a, indexing="ij")
        return np.column_stack([gx.ravel(), gy.ravel()])


@dataclass(frozen=True)
class CollectiveRates:
    """Collective linewidth Gamma_k and cooperative shift Delta_k at wavevector k."""

    k: tuple[float, float]
    gamma_k: float
    delta_k: float


def free_space_green(lambda_p: float, r) -> np.ndarray:
    """Free-space dyadic Green's tensor G(omega, r) at wavelength lambda_p.

    Convention (k = 2 pi / lambda_p, rh = r/|r|):

        G(r) = exp(i k r) / (4 pi r)
               * [ (1 + (i k r - 1)/(k r)^2) I  +  ((3 - 3 i k r)/(k r)^2 - 1) rh rh ]

    In this normalization Im G(r -> 0) = k/(6 pi) I, so a single atom decays
    at gamma_atom under the collective-rate relation used by this module.
    The tensor is symmetric and even in r, hence reciprocity G(r) = G(-r)^T
    holds identically.
    """
    r = np.asarray(r, dtype=float)
    if r.shape != (3,):
        raise DomainError("r must be a 3-vector")
    dist = float(np.linalg.norm(r))
    if dist == 0.0:
        raise DomainError(
            "free_space_green is singular at r = 0; the self-term is handled "
            "separately (its imaginary part is green_self_im, its real part "
            "is renormalized away)"
        )
    k = 2.0 * np.pi / lambda_p
    kr = k * dist
    a_coef = 1.0 + (1j * kr - 1.0) / kr**2
    b_coef = -1.0 + (3.0 - 3j * kr) / kr**2
    rh = r / dist
    return np.exp(1j * kr) / (4.0 * np.pi * dist) * (
        a_coef * np.eye(3) + b_coef * np.outer(rh, rh)
    )


def green_self_im(lambda_p: float) -> float:
    """Imaginary part of the Green's tensor at coincidence, Im G(0) = k/(6 pi).

    This is the regularized self-term: together with the normalization of
    `collective_rates` it fixes the single-atom decay to gamma_atom.
    """
    return (2.0 * np.pi / lambda_p) / (6.0 * np.pi)


def _projected_green_inplane(lambda_p, dx, dy, e_d):
    """e_d* . G(r) . e_d for in-plane separations, vectorized over (dx, dy)."""
    ex, ey = complex(e_d[0]), complex(e_d[1])
    dist = np.sqrt(dx * dx + dy * dy)
    k = 2.0 * np.pi / lambda_p
    kr = k * dist
    a_coef = 1.0 + (1j * kr - 1.0) / kr**2
    b_coef = -1.0 + (3.0 - 3j * kr) / kr**2
    # |rh . e_d|^2 with rh in-plane; e_d may be complex (e.g. circular in-plane).
    proj = np.abs((dx * ex + dy * ey) / dist) ** 2
    return np.exp(1j * kr) / (4.0 * np.pi * dist) * (a_coef + b_coef * proj)


def collective_rates(spec: LatticeSpec, k) -> CollectiveRates:
    """Finite-array collective rates (Gamma_k, Delta_k) at in-plane wavevector k.

    The displacement-class sum reproduces the per-atom average of the pair
    couplings, i.e. the expectation value of the coupling matrix in the
    k spin-wave state of the finite array.  A single-reference partial sum
    would ring without converging (the kernel decays only as 1/r); the
    pair-averaged form carries the array's autocorrelation window and
    converges as O(1/n_side).  No further smoothing or convergence
    acceleration is applied.

    Requires |k| within the first Brillouin zone.  Deterministic: summation
    order is fixed by the displacement grid regardless of array size.
    """
    kvec = np.asarray(k, dtype=float)
    if kvec.shape != (2,):
        raise DomainError("k must be a 2-vector (in-plane wavevector)")
    bz = np.pi / spec.a
    if np.any(np.abs(kvec) > bz * (1 + 1e-12)):
        raise DomainError("k lies outside the first Brillouin zone [-pi/a, pi/a]^2")

    n = spec.n_side
    if n == 1:
        return CollectiveRates(k=tuple(kvec), gamma_k=spec.gamma_atom, delta_k=0.0)

    d = np.arange(-(n - 1), n)
    mult = (n - np.abs(d)).astype(float)
    wx, wy = np.meshgrid(mult, mult, indexing="ij")
    dx, dy = np.meshgrid(d * spec.a, d * spec.a, indexing="ij")
    weight = wx * wy / n**2

    nonzero = (dx != 0.0) | (dy != 0.0)
    g_proj = np.zeros(dx.shape, dtype=complex)
    g_proj[nonzero] = _projected_green_inplane(
        spec.lambda_p, dx[nonzero], dy[nonzero], spec.e_d
    )
    phase = np.exp(-1j * (kvec[0] * dx + kvec[1] * dy))
    lattice_sum = np.sum(weight * g_proj * phase)

    # Gamma_k/2 + i Delta_k from the off-diagonal sum; the self-term adds
    # gamma_atom/2 to the real part and nothing to the shift.
    half_rate = -1j * 1.5 * spec.gamma_atom * spec.lambda_p * lattice_sum
    gamma_k = 2.0 * half_rate.real + spec.gamma_atom
    delta_k = half_rate.imag
    return CollectiveRates(k=tuple(kvec), gamma_k=float(gamma_k), delta_k=float(delta_k))


def gamma_k0_closed_form(a: float, lambda_p: float, gamma_atom: float) -> float:
    """Normal-incidence collective linewidth of the infinite subwavelength array.

    Gamma_{k=0} = (3 / 4 pi) (lambda_p / a)^2 gamma_atom.
    """
    if a <= 0 or lambda_p <= 0 or gamma_atom <= 0:
        raise DomainError("a, lambda_p and gamma_atom must be positive")
    return 3.0 / (4.0 * np.pi) * (lambda_p / a) ** 2 * gamma_atom
