"""Quantum correlators, Bell/CHSH inequalities, GHZ and Hardy constructions.

Correlators are P(a, b) = <psi| (a.sigma) x (b.sigma) |psi>; for the singlet
this equals -a.b, giving perfect anticorrelation at equal settings.  The
CHSH combination S = |P(a,b) - P(a,b')| + |P(a',b) + P(a',b')| is bounded by
2 for local hidden variables and reaches 2*sqrt(2) on the singlet.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .qmath import (
    TAU_EQ,
    assert_density_operator,
    assert_projector,
    assert_state_vector,
    kron,
    sigma_dot,
)

CHSH_QUANTUM_MAX = 2.0 * np.sqrt(2.0)  # Tsirelson bound
CHSH_LHV_BOUND = 2.0

GOLDEN_RATIO = (np.sqrt(5.0) + 1.0) / 2.0

# Settings at which the singlet reaches the quantum maximum.
OPTIMAL_CHSH_A = np.array([0.0, 1.0, 0.0])
OPTIMAL_CHSH_B = np.array([1.0, 1.0, 0.0]) / np.sqrt(2.0)
OPTIMAL_CHSH_A_PRIME = np.array([1.0, 0.0, 0.0])
OPTIMAL_CHSH_B_PRIME = np.array([1.0, -1.0, 0.0]) / np.sqrt(2.0)

# Coplanar directions 120 degrees apart; they push the three-correlator
# inequality to 3/2 against its bound of 1.
TRINE_A = np.array([1.0, 0.0, 0.0])
TRINE_B = np.array([-0.5, np.sqrt(3.0) / 2.0, 0.0])
TRINE_C = np.array([-0.5, -np.sqrt(3.0) / 2.0, 0.0])

BELL_ORIGINAL_BOUND = 1.0


def unit_setting(v) -> np.ndarray:
    vec = np.asarray(v, dtype=float).reshape(3)
    if abs(np.linalg.norm(vec) - 1.0) > TAU_EQ:
        raise ValueError(f"setting must be a unit vector, |v| = {np.linalg.norm(vec)}")
    return vec


@dataclass(frozen=True)
class ChshSettings:
    """Four analyzer directions (a, a', b, b'), all unit vectors."""

    a: np.ndarray
    a_prime: np.ndarray
    b: np.ndarray
    b_prime: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "a", unit_setting(self.a))
        object.__setattr__(self, "a_prime", unit_setting(self.a_prime))
        object.__setattr__(self, "b", unit_setting(self.b))
        object.__setattr__(self, "b_prime", unit_setting(self.b_prime))


def optimal_chsh_settings() -> ChshSettings:
    return ChshSettings(
        a=OPTIMAL_CHSH_A,
        a_prime=OPTIMAL_CHSH_A_PRIME,
        b=OPTIMAL_CHSH_B,
        b_prime=OPTIMAL_CHSH_B_PRIME,
    )


def singlet_state() -> np.ndarray:
    """(|01> - |10>)/sqrt(2), the two-qubit total-spin-zero state."""
    return np.array([0.0, 1.0, -1.0, 0.0], dtype=complex) / np.sqrt(2.0)


def ghz_state() -> np.ndarray:
    """(|000> - |111>)/sqrt(2) for three qubits."""
    psi = np.zeros(8, dtype=complex)
    psi[0] = 1.0 / np.sqrt(2.0)
    psi[7] = -1.0 / np.sqrt(2.0)
    return psi


def qm_correlator(psi, a, b) -> float:
    """<psi| (a.sigma) x (b.sigma) |psi>; equals -a.b on the singlet."""
    psi = assert_state_vector(psi)
    if psi.shape[0] != 4:
        raise ValueError("correlator needs a two-qubit state")
    op = kron(sigma_dot(unit_setting(a)), sigma_dot(unit_setting(b)))
    return float(np.vdot(psi, op @ psi).real)


def bell_original_lhs(psi, a, b, c, eta_a: int, eta_b: int, eta_c: int) -> float:
    """Signed three-correlator sum; local hidden variables keep it <= 1.

    Returns eta_a eta_b P(a,b) + eta_a eta_c P(a,c) + eta_b eta_c P(b,c);
    the caller compares with the bound 1.
    """
    for eta in (eta_a, eta_b, eta_c):
        if eta not in (1, -1):
            raise ValueError("eta values must be +1 or -1")
    return (
        eta_a * eta_b * qm_correlator(psi, a, b)
        + eta_a * eta_c * qm_correlator(psi, a, c)
        + eta_b * eta_c * qm_correlator(psi, b, c)
    )


def chsh_value(psi, settings: ChshSettings) -> float:
    """S = |P(a,b) - P(a,b')| + |P(a',b) + P(a',b')|."""
    p_ab = qm_correlator(psi, settings.a, settings.b)
    p_abp = qm_correlator(psi, settings.a, settings.b_prime)
    p_apb = qm_correlator(psi, settings.a_prime, settings.b)
    p_apbp = qm_correlator(psi, settings.a_prime, settings.b_prime)
    return abs(p_ab - p_abp) + abs(p_apb + p_apbp)


def correlation_tensor(psi) -> np.ndarray:
    """3x3 tensor T_ij = <psi| sigma_i x sigma_j |psi>.

    The correlator is bilinear in the settings, so P(a, b) = a . T b exactly.
    For the singlet T = -identity.
    """
    psi = assert_state_vector(psi)
    eye3 = np.eye(3)
    return np.array(
        [[qm_correlator(psi, eye3[i], eye3[j]) for j in range(3)] for i in range(3)]
    )


def _spherical(theta: float, phi: float) -> np.ndarray:
    return np.array(
        [np.sin(theta) * np.cos(phi), np.sin(theta) * np.sin(phi), np.cos(theta)]
    )


def _settings_from_angles(x) -> ChshSettings:
    return ChshSettings(
        a=_spherical(x[0], x[1]),
        a_prime=_spherical(x[2], x[3]),
        b=_spherical(x[4], x[5]),
        b_prime=_spherical(x[6], x[7]),
    )


_INV_GOLDEN = (np.sqrt(5.0) - 1.0) / 2.0


def _golden_max(f, lo: float, hi: float, tol: float) -> tuple[float, float]:
    """Golden-section maximization of a unimodal-enough f on [lo, hi]."""
    x1 = hi - _INV_GOLDEN * (hi - lo)
    x2 = lo + _INV_GOLDEN * (hi - lo)
    f1, f2 = f(x1), f(x2)
    while hi - lo > tol:
        if f1 < f2:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + _INV_GOLDEN * (hi - lo)
            f2 = f(x2)
        else:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - _INV_GOLDEN * (hi - lo)
            f1 = f(x1)
    xm = 0.5 * (lo + hi)
    return xm, f(xm)


def _coordinate_ascent(f, x0, window: float, tol: float, shrink: float = 0.5) -> tuple[np.ndarray, float]:
    """Repeated per-coordinate golden-section sweeps with a shrinking window."""
    x = np.array(x0, dtype=float)
    best = f(x)
    w = window
    while w > tol:
        for i in range(len(x)):
            def along(v, i=i):
                trial = x.copy()
                trial[i] = v
                return f(trial)

            xi, fi = _golden_max(along, x[i] - w, x[i] + w, tol=max(w * 1e-3, tol * 1e-2))
            if fi > best:
                best = fi
                x[i] = xi
        w *= shrink
    return x, best


def chsh_optimize(
    psi, restarts: int = 20, tol: float = 1e-6, seed: int = 0
) -> tuple[ChshSettings, float]:
    """Maximize the CHSH value over all four settings by multi-start
    coordinate ascent on the eight spherical angles.

    The search evaluates S through the precomputed correlation tensor
    (exactly equivalent, bilinearity in the settings); the returned value
    is recomputed from the matrix elements at the best settings.
    Deterministic for fixed (restarts, seed); ties between restarts go to
    the earliest.  On the singlet the maximum is 2*sqrt(2).
    """
    if restarts < 1:
        raise ValueError("restarts must be at least 1")
    psi = assert_state_vector(psi)
    tensor = correlation_tensor(psi)

    def objective(x):
        a = _spherical(x[0], x[1])
        ap = _spherical(x[2], x[3])
        b = _spherical(x[4], x[5])
        bp = _spherical(x[6], x[7])
        ta, tap = tensor.T @ a, tensor.T @ ap
        return abs(ta @ b - ta @ bp) + abs(tap @ b + tap @ bp)

    rng = np.random.default_rng(seed)
    best_x = None
    best_val = -np.inf
    for _ in range(restarts):
        x0 = np.concatenate(
            [rng.uniform(0.0, np.pi, 1), rng.uniform(0.0, 2 * np.pi, 1)] * 4
        )
        x, val = _coordinate_ascent(objective, x0, window=np.pi / 2, tol=tol * 1e-2)
        if val > best_val + 1e-15:
            best_val = val
            best_x = x
    settings = _settings_from_angles(best_x)
    return settings, chsh_value(psi, settings)


class GhzSearchResult(NamedTuple):
    n_checked: int
    n_satisfying: int
    parity_forced_product: int


def ghz_assignment_search(xxx_target: int = -1) -> GhzSearchResult:
    """Exhaustive search over the 64 local value assignments (m_x, m_y) per
    particle, against the three m_x m_y m_y = +1 constraints and
    m_x m_x m_x = xxx_target.

    Multiplying the first three constraints forces m_x m_x m_x = +1, so the
    quantum target -1 leaves zero satisfying assignments.
    """
    if xxx_target not in (1, -1):
        raise ValueError("xxx_target must be +1 or -1")
    n_satisfying = 0
    n_checked = 0
    for bits in itertools.product((1, -1), repeat=6):
        mx = bits[0:3]
        my = bits[3:6]
        n_checked += 1
        if (
            mx[0] * my[1] * my[2] == 1
            and my[0] * mx[1] * my[2] == 1
            and my[0] * my[1] * mx[2] == 1
            and mx[0] * mx[1] * mx[2] == xxx_target
        ):
            n_satisfying += 1
    return GhzSearchResult(n_checked=n_checked, n_satisfying=n_satisfying, parity_forced_product=1)


def ghz_stabilizer_deviations(psi=None) -> dict[str, float]:
    """Max entrywise deviations of the four parity identities on the GHZ state.

    X Y Y, Y X Y and Y Y X fix the state; X X X flips its sign.
    """
    if psi is None:
        psi = ghz_state()
    psi = assert_state_vector(psi)
    if psi.shape[0] != 8:
        raise ValueError("GHZ identities need a three-qubit state")
    from .qmath import SIGMA_X, SIGMA_Y

    def triple(p1, p2, p3):
        return kron(kron(p1, p2), p3)

    return {
        "xyy": float(np.max(np.abs(triple(SIGMA_X, SIGMA_Y, SIGMA_Y) @ psi - psi))),
        "yxy": float(np.max(np.abs(triple(SIGMA_Y, SIGMA_X, SIGMA_Y) @ psi - psi))),
        "yyx": float(np.max(np.abs(triple(SIGMA_Y, SIGMA_Y, SIGMA_X) @ psi - psi))),
        "xxx": float(np.max(np.abs(triple(SIGMA_X, SIGMA_X, SIGMA_X) @ psi + psi))),
    }


class HardyParams(NamedTuple):
    p1: float
    p2: float


@dataclass(frozen=True)
class HardyConstruction:
    """Two-qubit state with the four joint-outcome conditions built in.

    psi lives in the (u, v) product basis with u = |0>, v = |1>.  The primed
    single-qubit bases (u', v') are fixed by the one-dimensional
    orthogonality conditions; p is the probability of the jointly primed
    outcome that local realism forbids.
    """

    psi: np.ndarray
    u1_prime: np.ndarray
    v1_prime: np.ndarray
    u2_prime: np.ndarray
    v2_prime: np.ndarray
    p: float
    condition_residuals: tuple


def hardy_probability(p1: float, p2: float) -> float:
    """Closed form p1 (1 - p1) p2 (1 - p2) / (1 - p1 p2)."""
    return p1 * (1.0 - p1) * p2 * (1.0 - p2) / (1.0 - p1 * p2)


def _phase_fix(vec: np.ndarray) -> np.ndarray:
    """Scale so the first nonzero amplitude is real positive."""
    for c in vec:
        if abs(c) > 1e-14:
            return vec * (abs(c) / c)
    return vec


def _orthogonal_2d(vec: np.ndarray) -> np.ndarray:
    out = np.array([-np.conj(vec[1]), np.conj(vec[0])])
    return _phase_fix(out / np.linalg.norm(out))


def hardy_build(p1: float, p2: float) -> HardyConstruction:
    """Build the Hardy state and primed bases for parameters in (0, 1).

    The unnormalized state is
        sqrt((1-p1)(1-p2)) |v,v> - sqrt(p1(1-p2)) |u,v> - sqrt(p2(1-p1)) |v,u>
    whose squared coefficients sum to 1 - p1 p2, so dividing by
    sqrt(1 - p1 p2) normalizes it exactly.  v2' is the unique direction
    with <v, v2'|psi> = 0, v1' the unique direction with <v1', v|psi> = 0;
    u' completes each primed basis.  p = |<v1', v2'|psi>|^2.
    """
    if not (0.0 < p1 < 1.0 and 0.0 < p2 < 1.0):
        raise ValueError(f"parameters must lie strictly inside (0, 1), got ({p1}, {p2})")
    norm = np.sqrt(1.0 - p1 * p2)
    # Amplitude layout: index = 2*j1 + j2 with u = |0>, v = |1>.
    psi = (
        np.array(
            [
                0.0,
                -np.sqrt(p1 * (1.0 - p2)),
                -np.sqrt(p2 * (1.0 - p1)),
                np.sqrt((1.0 - p1) * (1.0 - p2)),
            ],
            dtype=complex,
        )
        / norm
    )
    amps = psi.reshape(2, 2)
    v2_prime = _orthogonal_2d(amps[1, :])  # <v x v2'|psi> = 0
    v1_prime = _orthogonal_2d(amps[:, 1])  # <v1' x v|psi> = 0
    u2_prime = _orthogonal_2d(v2_prime)
    u1_prime = _orthogonal_2d(v1_prime)

    u1 = np.array([1.0, 0.0], dtype=complex)
    u2 = np.array([1.0, 0.0], dtype=complex)
    v1 = np.array([0.0, 1.0], dtype=complex)
    v2 = np.array([0.0, 1.0], dtype=complex)
    residuals = (
        abs(np.vdot(np.kron(u1, u2), psi)),
        abs(np.vdot(np.kron(v1, v2_prime), psi)),
        abs(np.vdot(np.kron(v1_prime, v2), psi)),
    )
    p = float(abs(np.vdot(np.kron(v1_prime, v2_prime), psi)) ** 2)
    if max(residuals) > TAU_EQ:
        raise AssertionError(f"orthogonality conditions violated: {residuals}")
    if p <= 0.0:
        raise AssertionError("jointly primed probability vanished")
    return HardyConstruction(
        psi=psi,
        u1_prime=u1_prime,
        v1_prime=v1_prime,
        u2_prime=u2_prime,
        v2_prime=v2_prime,
        p=p,
        condition_residuals=residuals,
    )


def hardy_optimize(grid: int = 100, tol: float = 1e-8) -> tuple[HardyParams, float]:
    """Maximize the forbidden-outcome probability over (p1, p2) in (0, 1)^2.

    Grid scan followed by per-coordinate golden-section refinement of the
    constructed (not closed-form) probability.  The maximum sits at
    p1 = p2 = 1/golden-ratio with p = golden-ratio^-5.
    """
    if grid < 10:
        raise ValueError("grid must be at least 10")

    def objective(params):
        q1 = min(max(params[0], 1e-9), 1.0 - 1e-9)
        q2 = min(max(params[1], 1e-9), 1.0 - 1e-9)
        return hardy_build(q1, q2).p

    points = np.arange(1, grid + 1) / (grid + 1.0)
    best = (-np.inf, None)
    for q1 in points:
        for q2 in points:
            val = objective((q1, q2))
            if val > best[0]:
                best = (val, (q1, q2))
    spacing = 1.0 / (grid + 1.0)
    x, val = _coordinate_ascent(objective, best[1], window=2 * spacing, tol=tol * 1e-2)
    return HardyParams(p1=float(x[0]), p2=float(x[1])), float(val)


def no_signalling_check(rho, a, b_projectors) -> float:
    """|Tr(rho' A) - Tr(rho A)| with rho' = sum_beta P_beta rho P_beta.

    Requires the P_beta to be mutually orthogonal projectors resolving the
    identity, all commuting with A; the deviation is then zero up to
    roundoff, so a prior measurement cannot signal through expectations.
    """
    rho = assert_density_operator(rho)
    a = np.asarray(a, dtype=complex)
    if a.shape != rho.shape:
        raise ValueError("observable dimension does not match the state")
    projs = [assert_projector(p) for p in b_projectors]
    total = sum(projs)
    if np.max(np.abs(total - np.eye(rho.shape[0]))) > TAU_EQ:
        raise ValueError("projectors do not resolve the identity")
    for i, p in enumerate(projs):
        for q in projs[i + 1 :]:
            if np.max(np.abs(p @ q)) > TAU_EQ:
                raise ValueError("projectors are not mutually orthogonal")
        if np.max(np.abs(a @ p - p @ a)) > TAU_EQ:
            raise ValueError("observable does not commute with every projector")
    rho_after = sum(p @ rho @ p for p in projs)
    before = complex(np.trace(rho @ a))
    after = complex(np.trace(rho_after @ a))
    return abs(after - before)
