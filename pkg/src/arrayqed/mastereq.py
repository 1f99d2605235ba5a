"""Blockaded multi-channel master equation and steady-state correlators.

The Rydberg blockade truncates the dynamics of K driven collective modes to
the (K+1)-dimensional space {|0>, |1>_1, ..., |1>_K}: a common ground state
and one singly-excited state per channel, with no excitation exchange
between channels.  The density matrix evolves under

    d rho / dt = -i (H rho - rho H^dag) + sum_k gamma_k s_k rho s_k^dag,

with s_k = |0><1|_k and the non-Hermitian

    H = sum_k (omega_k - delta - i gamma_k / 2) |1><1|_k
        - (i Omega_k |1>_k <0| + h.c.).

Everything here is dense linear algebra on the (K+1)^2-dimensional
Liouvillian: a null-space solve for the steady state, adaptive Runge-Kutta
for time evolution, and the quantum regression theorem for two-time
correlators.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.integrate import solve_ivp
from scipy.linalg import expm, null_space

from .channels import ChannelParams, DerivedChannel, derive_channel
from .errors import DomainError, IntegrationError, NumericError

__all__ = [
    "BlockadedChannel",
    "BlockadedModel",
    "BlockadedState",
    "lowering_operator",
    "build_effective_hamiltonian",
    "liouvillian",
    "steady_state",
    "evolve",
    "two_time_correlator",
    "steady_expectation",
    "trace_distance",
]


@dataclass(frozen=True)
class BlockadedChannel:
    """One channel of the blockaded model: constants plus its coherent drive."""

    params: ChannelParams
    derived: DerivedChannel
    drive: complex

    @classmethod
    def from_params(cls, params, eit, drive) -> "BlockadedChannel":
        return cls(params=params, derived=derive_channel(params, eit), drive=drive)


@dataclass(frozen=True)
class BlockadedModel:
    """K driven channels sharing the blockaded ground state."""

    channels: tuple[BlockadedChannel, ...]

    def __post_init__(self):
        labels = [c.params.label for c in self.channels]
        if len(set(labels)) != len(labels):
            raise DomainError("channel labels must be unique")

    @property
    def n_channels(self) -> int:
        return len(self.channels)

    @property
    def dim(self) -> int:
        return len(self.channels) + 1


@dataclass
class BlockadedState:
    """Density matrix on the blockaded space, with contract checks."""

    rho: np.ndarray

    def __post_init__(self):
        self.rho = np.asarray(self.rho, dtype=complex)
        if self.rho.ndim != 2 or self.rho.shape[0] != self.rho.shape[1]:
            raise DomainError("rho must be a square matrix")

    @classmethod
    def ground(cls, dim: int) -> "BlockadedState":
        rho = np.zeros((dim, dim), dtype=complex)
        rho[0, 0] = 1.0
        return cls(rho)

    def validate(self, herm_tol=1e-10, trace_tol=1e-10, eig_tol=1e-10) -> None:
        """Hermiticity, unit trace and positivity within the stated tolerances."""
        if np.max(np.abs(self.rho - self.rho.conj().T)) > herm_tol:
            raise NumericError("state is not Hermitian within tolerance")
        if abs(np.trace(self.rho) - 1.0) > trace_tol:
            raise NumericError("state trace deviates from 1 beyond tolerance")
        if np.linalg.eigvalsh(0.5 * (self.rho + self.rho.conj().T)).min() < -eig_tol:
            raise NumericError("state has a negative eigenvalue beyond tolerance")

    def expectation(self, op: np.ndarray) -> complex:
        return complex(np.trace(op @ self.rho))


def lowering_operator(dim: int, channel_index: int) -> np.ndarray:
    """s_k = |0><1|_k on the blockaded space (channel_index counts from 0)."""
    if not 0 <= channel_index < dim - 1:
        raise DomainError("channel index out of range")
    op = np.zeros((dim, dim), dtype=complex)
    op[0, channel_index + 1] = 1.0
    return op


def build_effective_hamiltonian(model: BlockadedModel, delta: float) -> np.ndarray:
    """Non-Hermitian H with complex mode energies on the diagonal and drives in row 0.

    No |1>_k <-> |1>_k' coupling appears: the blockade conserves channel
    directionality.
    """
    dim = model.dim
    h = np.zeros((dim, dim), dtype=complex)
    for i, ch in enumerate(model.channels, start=1):
        omega_k = ch.derived.omega_k
        gamma_k = ch.derived.gamma_ryd
        h[i, i] = omega_k - delta - 1j * gamma_k / 2.0
        h[i, 0] = -1j * ch.drive
        h[0, i] = 1j * np.conj(ch.drive)
    return h


def liouvillian(model: BlockadedModel, delta: float) -> np.ndarray:
    """Dense superoperator L with column-stacking convention vec(rho) = rho.ravel(order='F')."""
    h = build_effective_hamiltonian(model, delta)
    dim = model.dim
    eye = np.eye(dim)
    lv = -1j * (np.kron(eye, h) - np.kron(h.conj(), eye))
    for i, ch in enumerate(model.channels):
        s = lowering_operator(dim, i)
        lv += ch.derived.gamma_ryd * np.kron(s.conj(), s)
    return lv


def _vec(rho: np.ndarray) -> np.ndarray:
    return rho.ravel(order="F")


def _unvec(v: np.ndarray, dim: int) -> np.ndarray:
    return v.reshape(dim, dim, order="F")


def steady_state(model: BlockadedModel, delta: float, residual_tol: float = 1e-10) -> BlockadedState:
    """Unique steady state from the Liouvillian null space.

    Requires gamma_k > 0 for every channel (which guarantees uniqueness on
    the blockaded space); the returned state is hermitized, trace-normalized
    and checked to satisfy ||L vec(rho)|| < residual_tol.
    """
    for ch in model.channels:
        if ch.derived.gamma_ryd <= 0:
            raise DomainError("steady_state needs gamma_k > 0 for every channel")
    lv = liouvillian(model, delta)
    basis = null_space(lv)
    if basis.shape[1] != 1:
        raise NumericError(
            f"degenerate steady-state subspace: null space has dimension {basis.shape[1]}"
        )
    rho = _unvec(basis[:, 0], model.dim)
    rho = rho / np.trace(rho)
    rho = 0.5 * (rho + rho.conj().T)
    residual = np.linalg.norm(lv @ _vec(rho))
    if residual > residual_tol:
        raise NumericError(f"steady-state residual {residual:.2e} exceeds {residual_tol:.0e}")
    state = BlockadedState(rho)
    state.validate()
    return state


def evolve(
    state: BlockadedState,
    model: BlockadedModel,
    delta: float,
    t: float,
    rtol: float = 1e-10,
    atol: float = 1e-12,
) -> BlockadedState:
    """Propagate the state for time t with adaptive explicit Runge-Kutta.

    Trace-preserving and positivity-preserving to within the integration
    tolerances; converges to the unique steady state for gamma_k > 0.
    """
    if t < 0:
        raise DomainError("t must be nonnegative")
    if t == 0:
        return BlockadedState(state.rho.copy())
    lv = liouvillian(model, delta)

    def rhs(_t, y):
        return lv @ y

    sol = solve_ivp(
        rhs,
        (0.0, t),
        _vec(state.rho).astype(complex),
        method="DOP853",
        rtol=rtol,
        atol=atol,
    )
    if not sol.success:
        raise IntegrationError(
            f"master-equation integration failed at t = {sol.t[-1]:.4g} "
            f"(of {t:.4g}): {sol.message}"
        )
    return BlockadedState(_unvec(sol.y[:, -1], model.dim))


def _propagators(lv: np.ndarray, taus: np.ndarray):
    """e^(L tau) for each tau, via eigendecomposition with an expm fallback."""
    try:
        w, vr = np.linalg.eig(lv)
        vr_inv = np.linalg.inv(vr)
        if np.linalg.cond(vr) < 1e10:
            return [(vr * np.exp(w * tau)) @ vr_inv for tau in taus]
    except np.linalg.LinAlgError:
        pass
    return [expm(lv * tau) for tau in taus]


def two_time_correlator(
    model: BlockadedModel,
    delta: float,
    a_op: np.ndarray,
    b_op: np.ndarray,
    c_op: np.ndarray,
    tau_grid,
) -> np.ndarray:
    """Steady-state two-time correlator <A(t) B(t+tau) C(t)> by quantum regression.

    The conditioned operator X(0) = C rho_ss A is propagated under the same
    Liouvillian as the state, and trace(B X(tau)) is read out on the grid.
    A and C may be identity matrices to obtain two-operator correlators.
    Requires tau >= 0 (stationarity supplies negative delays by conjugation).
    """
    taus = np.asarray(tau_grid, dtype=float)
    if np.any(taus < 0):
        raise DomainError("tau_grid must be nonnegative")
    rho_ss = steady_state(model, delta).rho
    x0 = _vec(c_op @ rho_ss @ a_op)
    lv = liouvillian(model, delta)
    out = np.empty(taus.shape, dtype=complex)
    for i, prop in enumerate(_propagators(lv, taus)):
        x_tau = _unvec(prop @ x0, model.dim)
        out[i] = np.trace(b_op @ x_tau)
    return out


def steady_expectation(model: BlockadedModel, delta: float, op: np.ndarray) -> complex:
    return steady_state(model, delta).expectation(op)


def trace_distance(rho_a: np.ndarray, rho_b: np.ndarray) -> float:
    """(1/2) || rho_a - rho_b ||_1 (sum of singular values of the difference)."""
    return 0.5 * float(np.sum(np.linalg.svd(rho_a - rho_b, compute_uv=False)))
