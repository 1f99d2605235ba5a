"""Output-field observables: intensities, photon correlations, entanglement.

The scattered field of channel k at port s (transmission +, reflection -)
is linear in the input amplitude and in the collective Rydberg coherence,

    E_{k,s}(z) = exp(+/- i k_z z) [ b_s E_p,k  +  r_k E_c* sigma_k  + noise ],

with b_+ = 1 + r_k, b_- = r_k and E_c = hbar Omega_c / (sqrt(N) d).  All
observables in scope are normal-ordered vacuum-input correlators, so the
noise operators never appear explicitly and the detector-position phase
cancels identically.

This module provides both routes to every observable:

* closed forms in the weak-field regime -- the normalized intensity, the
  zero-delay and delayed two-channel correlation functions (the latter for
  unequal channel parameters), and the Duan / squeezing entanglement
  measures with their shared Lorentzian strength K;
* a numeric route assembling the same quantities from master-equation
  steady states and quantum-regression two-time atomic correlators.

Normalization convention: g2 = G2 / (G1_1 G1_2), applied identically to
both routes so that residual differences are pure weak-field corrections.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .channels import DerivedChannel, check_weak_field
from .errors import DomainError, MissingCorrelatorError, NumericError
from .mastereq import (
    BlockadedModel,
    liouvillian,
    lowering_operator,
    propagators,
    steady_state,
)

__all__ = [
    "OutputPort",
    "TRANSMISSION",
    "REFLECTION",
    "FieldScale",
    "FieldDrive",
    "AtomicMoments",
    "FieldCorrelators",
    "CorrelationSet",
    "EntanglementResult",
    "QuadratureMoments",
    "output_field_map",
    "analytic_g1",
    "analytic_g2_zero",
    "g2_zero_normalized",
    "analytic_g2_tau",
    "saturated_limit_g2",
    "entanglement_measures",
    "atomic_moments",
    "drive_fields",
    "quadrature_moments",
    "analytic_correlations",
    "numeric_correlations",
]


@dataclass(frozen=True)
class OutputPort:
    """Detection port: transmission ('+') or reflection ('-')."""

    direction: str

    def __post_init__(self):
        if self.direction not in ("+", "-"):
            raise DomainError("port direction must be '+' or '-'")

    def b(self, r: complex) -> complex:
        """Linear input-output weight b_+ = 1 + r, b_- = r."""
        return 1.0 + r if self.direction == "+" else r


TRANSMISSION = OutputPort("+")
REFLECTION = OutputPort("-")


@dataclass(frozen=True)
class FieldScale:
    """Zero-point normalization of the quasi-localized output modes.

    ``e0_ratio`` is the dimensionless |E_p,1 / E_0|^2 with E_0 the zero-point
    field; ``phase_phi`` is the relative drive phase, E_p,2 = exp(-i phi) E_p,1.
    """

    e_c: complex
    e0_ratio: float
    phase_phi: float = math.pi / 2.0

    def __post_init__(self):
        if self.e0_ratio < 0:
            raise DomainError("e0_ratio must be nonnegative")


@dataclass(frozen=True)
class FieldDrive:
    """Coherent input amplitudes of the two channels plus the coupling scale E_c."""

    e_p1: complex
    e_p2: complex
    e_c: complex


@dataclass
class AtomicMoments:
    """Normal-ordered collective-mode correlators feeding the input-output map.

    Single-time moments are steady-state numbers; the two-time entries are
    arrays over `tau` with channel 1 detected first:

    * ``cross_lower``  <s1+(t) s2(t+tau)>
    * ``cross_raise``  <s1+(t) s2+(t+tau)>
    * ``three_a``      <s1+(t) s2(t+tau) s1(t)>
    * ``three_b``      <s2+(t+tau) s2(t+tau) s1(t)>
    * ``four``         <s1+(t) s2+(t+tau) s2(t+tau) s1(t)>

    Entries left as None simply restrict which observables can be assembled.
    """

    tau: np.ndarray | None = None
    mean1: complex | None = None
    mean2: complex | None = None
    pop1: float | None = None
    pop2: float | None = None
    pair12: complex | None = None
    sq1: complex | None = None
    sq2: complex | None = None
    coh12: complex | None = None
    cross_lower: np.ndarray | None = None
    cross_raise: np.ndarray | None = None
    three_a: np.ndarray | None = None
    three_b: np.ndarray | None = None
    four: np.ndarray | None = None

    def require(self, *names: str) -> None:
        for name in names:
            if getattr(self, name) is None:
                raise MissingCorrelatorError(name)


@dataclass
class FieldCorrelators:
    """Unnormalized field correlators from the input-output map."""

    tau: np.ndarray
    g1_1: float
    g1_2: float
    g2_tau: np.ndarray


def _intensity(beta: complex, eta: complex, mean: complex, pop: float) -> float:
    val = abs(beta) ** 2 + abs(eta) ** 2 * pop + 2.0 * (np.conj(beta) * eta * mean).real
    return float(val)


def output_field_map(
    port: OutputPort,
    ch1: DerivedChannel,
    ch2: DerivedChannel,
    moments: AtomicMoments,
    drive: FieldDrive,
    z: float = 0.0,
    k_z: float = 0.0,
) -> FieldCorrelators:
    """Map atomic correlators to normal-ordered field correlators.

    Expands <E1+(t) E2+(t+tau) E2(t+tau) E1(t)> and the two intensities over
    the coherent and atomic parts of each field.  The detector-position
    phase exp(+/- i k_z z) multiplies each field as a whole and cancels in
    every returned quantity; `z` and `k_z` are accepted so the cancellation
    can be exercised explicitly.
    """
    moments.require("mean1", "mean2", "pop1", "pop2")
    sign = 1.0 if port.direction == "+" else -1.0
    phase = np.exp(1j * sign * k_z * z)
    beta1 = phase * port.b(ch1.r) * drive.e_p1
    beta2 = phase * port.b(ch2.r) * drive.e_p2
    eta1 = phase * ch1.r * np.conj(drive.e_c)
    eta2 = phase * ch2.r * np.conj(drive.e_c)

    g1_1 = _intensity(beta1, eta1, moments.mean1, moments.pop1)
    g1_2 = _intensity(beta2, eta2, moments.mean2, moments.pop2)

    moments.require(
        "tau", "cross_lower", "cross_raise", "three_a", "three_b", "four"
    )
    tau = np.asarray(moments.tau, dtype=float)
    ones = np.ones_like(tau)
    # moment table keyed by which lowering/raising factors are picked from
    # E1+(t) E2+(t+tau) E2(t+tau) E1(t); stationarity fixes the single-time
    # entries, conjugation supplies the mirrored orderings.
    table = {
        (0, 0, 0, 0): ones,
        (1, 0, 0, 0): np.conj(moments.mean1) * ones,
        (0, 1, 0, 0): np.conj(moments.mean2) * ones,
        (0, 0, 1, 0): moments.mean2 * ones,
        (0, 0, 0, 1): moments.mean1 * ones,
        (1, 0, 0, 1): moments.pop1 * ones,
        (0, 1, 1, 0): moments.pop2 * ones,
        (1, 0, 1, 0): moments.cross_lower,
        (0, 1, 0, 1): np.conj(moments.cross_lower),
        (1, 1, 0, 0): moments.cross_raise,
        (0, 0, 1, 1): np.conj(moments.cross_raise),
        (1, 0, 1, 1): moments.three_a,
        (1, 1, 0, 1): np.conj(moments.three_a),
        (0, 1, 1, 1): moments.three_b,
        (1, 1, 1, 0): np.conj(moments.three_b),
        (1, 1, 1, 1): moments.four,
    }
    coeffs = (
        (np.conj(beta1), np.conj(eta1)),
        (np.conj(beta2), np.conj(eta2)),
        (beta2, eta2),
        (beta1, eta1),
    )
    g2 = np.zeros_like(tau, dtype=complex)
    for flags, moment in table.items():
        coef = 1.0 + 0.0j
        for slot, flag in enumerate(flags):
            coef *= coeffs[slot][flag]
        g2 = g2 + coef * moment
    return FieldCorrelators(tau=tau, g1_1=g1_1, g1_2=g1_2, g2_tau=g2.real)


# ---------------------------------------------------------------------------
# closed forms (weak-field regime)
# ---------------------------------------------------------------------------


def analytic_g1(ch: DerivedChannel, port: OutputPort, s_other: float = 0.0) -> float:
    """Normalized output intensity G1 / |E_p|^2 of a weakly driven channel.

    The companion channel enters only through its saturation ``s_other``:
    strong drive there (s_other -> inf) erases the EIT modification and
    restores the bare two-level result |b_s|^2 (cross-blockade).
    """
    b = port.b(ch.r)
    x = ch.contrast
    return float(
        abs(b) ** 2
        + (abs(x) ** 2 - 2.0 * (np.conj(b) * x).real) / (1.0 + s_other)
    )


def analytic_g2_zero(ch: DerivedChannel, port: OutputPort, s_other: float = 0.0) -> float:
    """Equal-time cross-correlation G2(0) / (|E_p,1|^2 |E_p,2|^2), identical channels.

    In the weak limit of the companion channel this is |b_s|^2 |b_s - 2(r - rt)|^2.
    """
    b = port.b(ch.r)
    x = ch.contrast
    return float(
        abs(b) ** 4
        - 2.0
        / (1.0 + s_other)
        * (2.0 * (abs(b) ** 2 * np.conj(b) * x).real - 2.0 * abs(b) ** 2 * abs(x) ** 2)
    )


def g2_zero_normalized(
    ch: DerivedChannel, port: OutputPort, s1: float = 0.0, s2: float = 0.0
) -> float:
    """g2(0) = G2(0) / (G1_1 G1_2) with the matching saturation factors."""
    g1_first = analytic_g1(ch, port, s_other=s2)
    g1_second = analytic_g1(ch, port, s_other=s1)
    norm = g1_first * g1_second
    if norm == 0.0:
        raise NumericError("g2 normalization failed: vanishing intensity product")
    return analytic_g2_zero(ch, port, s_other=s2) / norm


def analytic_g2_tau(
    ch1: DerivedChannel,
    ch2: DerivedChannel,
    port: OutputPort,
    tau_grid,
    s1: float = 0.0,
    s2: float = 0.0,
    normalized: bool = True,
):
    """Delayed cross-correlation g2(tau), channel 1 detected first.

    Valid for unequal channel parameters; the only tau dependence is the
    factor exp(-(gamma_2/2 + i (omega_2 - delta)) tau) of the channel
    detected second, which sets the correlation time 1/gamma_2.  Weak drive
    in both channels is assumed: the call warns above S = 1e-2 and refuses
    above S = 1 (use the master-equation route there).

    Returns g2 normalized by the weak-field intensity product by default;
    ``normalized=False`` yields G2 / (|E_p,1|^2 |E_p,2|^2).
    """
    check_weak_field(max(s1, s2), "delayed-correlation closed form")
    taus = np.asarray(tau_grid, dtype=float)
    if np.any(taus < 0):
        raise DomainError("tau_grid must be nonnegative")
    b1 = port.b(ch1.r)
    b2 = port.b(ch2.r)
    x1 = ch1.contrast
    x2 = ch2.contrast
    delta = ch2.eit.delta
    decay = np.exp(-(ch2.gamma_ryd / 2.0 + 1j * (ch2.omega_k - delta)) * taus)
    em1 = decay - 1.0
    series = (
        abs(b1) ** 2 * abs(b2) ** 2
        - 2.0 * (abs(b2) ** 2 * np.conj(b1) * x1 + abs(b1) ** 2 * np.conj(b2) * x2).real
        + abs(b2) ** 2 * abs(x1) ** 2
        + abs(b1) ** 2 * abs(x2) ** 2
        + 2.0 * (b1 * np.conj(b2) * np.conj(x1) * x2).real
        + 2.0
        * (
            (
                np.conj(b2) * abs(x1) ** 2 * x2
                + np.conj(b1) * abs(x2) ** 2 * x1
                - np.conj(b1) * np.conj(b2) * x1 * x2
            )
            * em1
        ).real
        + abs(x1) ** 2 * abs(x2) ** 2 * np.abs(em1) ** 2
    )
    if not normalized:
        return series
    norm = analytic_g1(ch1, port) * analytic_g1(ch2, port)
    if norm == 0.0:
        raise NumericError("g2 normalization failed: vanishing intensity product")
    return series / norm


def saturated_limit_g2(ch: DerivedChannel) -> float:
    """Large-detuning limit of g2(0) along the collective resonance delta = omega.

    Equals (1 - 2 r_res)^2 / (1 - r_res)^4; diverges (returns inf) for a
    lossless array, r_res = 1.
    """
    r_res = ch.r_res
    if r_res == 1.0:
        return math.inf
    return (1.0 - 2.0 * r_res) ** 2 / (1.0 - r_res) ** 4


# ---------------------------------------------------------------------------
# entanglement measures
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EntanglementResult:
    """Inseparability and squeezing witnesses of the two output channels.

    ``duan_d`` < 1 certifies entanglement; ``squeezing_v`` < 1 certifies
    two-mode quadrature squeezing.  ``k_param`` = |(r1 - rt1)(r2 - rt2)| is
    their shared correlation strength, a Lorentzian of width gamma peaked
    at the collective resonance delta = omega with height r_res^2.
    """

    duan_d: float
    squeezing_v: float
    k_param: float
    k_sq: float
    entangled: bool


def entanglement_measures(
    ch1: DerivedChannel, ch2: DerivedChannel, scale: FieldScale
) -> EntanglementResult:
    """Closed-form Duan parameter D, squeezing V and strength K (weak fields).

    D = 1 - 2 |E_p,1/E_0|^2 K with K = |(r1 - rt1)(r2 - rt2)|; the squeezing
    uses K_sq = |(r1 - rt1) e^{i phi} + (r2 - rt2)|^2 for equal drive
    magnitudes with relative phase phi.  The weak-field normalization bound
    2 |E_p/E_0|^2 K < 1 is enforced.
    """
    x1 = ch1.contrast
    x2 = ch2.contrast
    k_param = float(abs(x1 * x2))
    bound = 2.0 * scale.e0_ratio * k_param
    if bound >= 1.0:
        raise DomainError(
            f"weak-field bound violated: 2 |E_p/E_0|^2 K = {bound:.3g} >= 1. "
            "The zero-point normalization requires the coherent amplitude per "
            "quasi-localized mode to stay below one photon; reduce e0_ratio."
        )
    k_sq = float(abs(x1 * np.exp(1j * scale.phase_phi) + x2) ** 2)
    duan_d = 1.0 - bound
    squeezing_v = 1.0 - scale.e0_ratio * k_sq
    return EntanglementResult(
        duan_d=duan_d,
        squeezing_v=squeezing_v,
        k_param=k_param,
        k_sq=k_sq,
        entangled=bool(duan_d < 1.0),
    )


@dataclass(frozen=True)
class QuadratureMoments:
    """Centered quadrature moments of the two output modes a_k = E_k / E_0.

    Carries everything needed to evaluate the Duan sum D(theta) and the
    total-field variance V(theta) at any quadrature angle, plus their
    analytic minima over theta.
    """

    dn1: float
    dn2: float
    coh_cross: complex
    anom_cross: complex
    anom_total: complex

    def duan_at(self, theta: float) -> float:
        return 1.0 + self.dn1 + self.dn2 + 2.0 * (
            np.exp(2j * theta) * self.anom_cross
        ).real

    def duan_min(self) -> float:
        return 1.0 + self.dn1 + self.dn2 - 2.0 * abs(self.anom_cross)

    def squeezing_at(self, theta: float) -> float:
        var_a = self.dn1 + self.dn2 + 2.0 * self.coh_cross.real
        return 1.0 + var_a + (np.exp(2j * theta) * self.anom_total).real

    def squeezing_min(self) -> float:
        var_a = self.dn1 + self.dn2 + 2.0 * self.coh_cross.real
        return 1.0 + var_a - abs(self.anom_total)


def quadrature_moments(
    model: BlockadedModel,
    delta: float,
    scale: FieldScale,
    n_atoms: int = 1,
) -> QuadratureMoments:
    """Numeric quadrature moments from the master-equation steady state.

    Uses the quadrature-variance definitions of D and V directly: the
    normal-ordered number fluctuations and anomalous correlators of the
    output modes are assembled from steady-state atomic moments, normalized
    by the zero-point field E_0 = |E_p,1| / sqrt(e0_ratio).
    """
    if model.n_channels != 2:
        raise DomainError("quadrature moments are defined for a two-channel model")
    if scale.e0_ratio <= 0:
        raise DomainError("e0_ratio must be positive for the numeric quadrature route")
    drive = drive_fields(model, n_atoms=n_atoms)
    e0_sq = abs(drive.e_p1) ** 2 / scale.e0_ratio
    rho = steady_state(model, delta).rho
    dim = model.dim
    s1 = lowering_operator(dim, 0)
    s2 = lowering_operator(dim, 1)

    def ev(op):
        return complex(np.trace(op @ rho))

    mean1, mean2 = ev(s1), ev(s2)
    eta1 = model.channels[0].derived.r * np.conj(drive.e_c)
    eta2 = model.channels[1].derived.r * np.conj(drive.e_c)
    dn1 = (abs(eta1) ** 2 * (ev(s1.conj().T @ s1).real - abs(mean1) ** 2)) / e0_sq
    dn2 = (abs(eta2) ** 2 * (ev(s2.conj().T @ s2).real - abs(mean2) ** 2)) / e0_sq
    coh_cross = np.conj(eta1) * eta2 * (ev(s1.conj().T @ s2) - np.conj(mean1) * mean2) / e0_sq
    anom_cross = eta1 * eta2 * (ev(s1 @ s2) - mean1 * mean2) / e0_sq
    anom_total = (
        eta1**2 * (ev(s1 @ s1) - mean1**2)
        + eta2**2 * (ev(s2 @ s2) - mean2**2)
        + 2.0 * eta1 * eta2 * (ev(s1 @ s2) - mean1 * mean2)
    ) / e0_sq
    return QuadratureMoments(
        dn1=float(dn1),
        dn2=float(dn2),
        coh_cross=complex(coh_cross),
        anom_cross=complex(anom_cross),
        anom_total=complex(anom_total),
    )


# ---------------------------------------------------------------------------
# numeric route: master equation + regression -> field observables
# ---------------------------------------------------------------------------


def drive_fields(model: BlockadedModel, n_atoms: int = 1) -> FieldDrive:
    """Invert the effective-drive relation to recover input amplitudes (hbar = d = 1).

    E_p,k = -Omega_k Gamma_k / (2 Omega_c sqrt(N) r_k) and
    E_c = Omega_c / sqrt(N); every channel must share the coupling field.
    """
    if model.n_channels != 2:
        raise DomainError("drive_fields expects a two-channel model")
    omega_c = model.channels[0].derived.eit.omega_c
    for ch in model.channels:
        if ch.derived.eit.omega_c != omega_c:
            raise DomainError("channels must share the coupling Rabi frequency")
    if omega_c == 0:
        raise DomainError("field amplitudes are undefined for Omega_c = 0")
    root_n = math.sqrt(n_atoms)
    eps = []
    for ch in model.channels:
        eps.append(
            -ch.drive * ch.params.gamma_k / (2.0 * omega_c * root_n * ch.derived.r)
        )
    return FieldDrive(e_p1=eps[0], e_p2=eps[1], e_c=omega_c / root_n)


def atomic_moments(model: BlockadedModel, delta: float, tau_grid) -> AtomicMoments:
    """All atomic correlators of the two-channel model needed by the field map.

    Single-time moments come from the steady state; the two-time entries are
    propagated with the quantum regression theorem, sharing one propagator
    family across all five correlators.
    """
    if model.n_channels != 2:
        raise DomainError("atomic_moments expects a two-channel model")
    taus = np.asarray(tau_grid, dtype=float)
    if np.any(taus < 0):
        raise DomainError("tau_grid must be nonnegative")
    rho = steady_state(model, delta).rho
    dim = model.dim
    s1 = lowering_operator(dim, 0)
    s2 = lowering_operator(dim, 1)
    n2 = s2.conj().T @ s2

    def ev(op):
        return complex(np.trace(op @ rho))

    lv = liouvillian(model, delta)
    props = propagators(lv, taus)

    x_coh = (rho @ s1.conj().T).ravel(order="F")      # seeds <s1+(t) ...(t+tau)>
    x_pop = (s1 @ rho @ s1.conj().T).ravel(order="F")  # seeds <s1+(t) ...(t+tau) s1(t)>
    x_low = (s1 @ rho).ravel(order="F")                # seeds <...(t+tau) s1(t)>

    cross_lower = np.empty(taus.shape, dtype=complex)
    cross_raise = np.empty(taus.shape, dtype=complex)
    three_a = np.empty(taus.shape, dtype=complex)
    three_b = np.empty(taus.shape, dtype=complex)
    four = np.empty(taus.shape, dtype=complex)
    for i, prop in enumerate(props):
        m_coh = (prop @ x_coh).reshape(dim, dim, order="F")
        m_pop = (prop @ x_pop).reshape(dim, dim, order="F")
        m_low = (prop @ x_low).reshape(dim, dim, order="F")
        cross_lower[i] = np.trace(s2 @ m_coh)
        cross_raise[i] = np.trace(s2.conj().T @ m_coh)
        three_a[i] = np.trace(s2 @ m_pop)
        four[i] = np.trace(n2 @ m_pop)
        three_b[i] = np.trace(n2 @ m_low)
    return AtomicMoments(
        tau=taus,
        mean1=ev(s1),
        mean2=ev(s2),
        pop1=ev(s1.conj().T @ s1).real,
        pop2=ev(n2).real,
        pair12=ev(s1 @ s2),
        sq1=ev(s1 @ s1),
        sq2=ev(s2 @ s2),
        coh12=ev(s1.conj().T @ s2),
        cross_lower=cross_lower,
        cross_raise=cross_raise,
        three_a=three_a,
        three_b=three_b,
        four=four,
    )


# ---------------------------------------------------------------------------
# bundled results
# ---------------------------------------------------------------------------


@dataclass
class CorrelationSet:
    """One complete set of correlation observables with provenance."""

    g1: dict[str, float]
    tau: np.ndarray
    g2_tau: np.ndarray
    g2_zero: float
    duan_d: float
    squeezing_v: float
    k_param: float
    provenance: str = field(default="analytic")


def analytic_correlations(
    ch1: DerivedChannel,
    ch2: DerivedChannel,
    port: OutputPort,
    tau_grid,
    scale: FieldScale,
    s1: float = 0.0,
    s2: float = 0.0,
) -> CorrelationSet:
    """Closed-form CorrelationSet (weak-field route)."""
    taus = np.asarray(tau_grid, dtype=float)
    g2 = analytic_g2_tau(ch1, ch2, port, taus, s1=s1, s2=s2)
    ent = entanglement_measures(ch1, ch2, scale)
    return CorrelationSet(
        g1={ch1.label: analytic_g1(ch1, port, s2), ch2.label: analytic_g1(ch2, port, s1)},
        tau=taus,
        g2_tau=g2,
        g2_zero=g2_zero_normalized(ch1, port, s1=s1, s2=s2),
        duan_d=ent.duan_d,
        squeezing_v=ent.squeezing_v,
        k_param=ent.k_param,
        provenance="analytic",
    )


def numeric_correlations(
    model: BlockadedModel,
    delta: float,
    port: OutputPort,
    tau_grid,
    scale: FieldScale,
    n_atoms: int = 1,
) -> CorrelationSet:
    """Master-equation CorrelationSet through the input-output map.

    Exact in the drive strength on the blockaded space; agrees with the
    analytic route up to O(S) for weak saturations.
    """
    taus = np.asarray(tau_grid, dtype=float)
    if taus.size == 0 or taus[0] != 0.0:
        taus = np.concatenate([[0.0], taus])
    moments = atomic_moments(model, delta, taus)
    drive = drive_fields(model, n_atoms=n_atoms)
    ch1 = model.channels[0].derived
    ch2 = model.channels[1].derived
    fields = output_field_map(port, ch1, ch2, moments, drive)
    norm = fields.g1_1 * fields.g1_2
    if norm == 0.0:
        raise NumericError("g2 normalization failed: vanishing intensity product")
    quad = quadrature_moments(model, delta, scale, n_atoms=n_atoms)
    return CorrelationSet(
        g1={
            ch1.label: fields.g1_1 / abs(drive.e_p1) ** 2,
            ch2.label: fields.g1_2 / abs(drive.e_p2) ** 2,
        },
        tau=taus,
        g2_tau=fields.g2_tau / norm,
        g2_zero=float(fields.g2_tau[0] / norm),
        duan_d=quad.duan_min(),
        squeezing_v=quad.squeezing_min(),
        k_param=abs(quad.anom_cross) / (2.0 * scale.e0_ratio) * 2.0
        if scale.e0_ratio > 0
        else float("nan"),
        provenance="numeric",
    )
