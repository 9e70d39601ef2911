"""Small dense complex linear algebra and qubit/Pauli constructions.

Everything here works on plain complex ndarrays at desk scale (dimensions
2 to 8), so near-machine tolerances are used throughout:

    TAU_EQ  = 1e-10   entrywise matrix/scalar comparisons
    TAU_PSD = 1e-9    eigenvalue nonnegativity for density operators
"""

from __future__ import annotations

import numpy as np

TAU_EQ = 1e-10
TAU_PSD = 1e-9

ID2 = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
PAULIS = np.stack([SIGMA_X, SIGMA_Y, SIGMA_Z])


def as_matrix(m) -> np.ndarray:
    mat = np.asarray(m, dtype=complex)
    if mat.ndim != 2:
        raise ValueError(f"expected a 2D matrix, got ndim={mat.ndim}")
    return mat


def is_hermitian(m, tol: float = TAU_EQ) -> bool:
    mat = as_matrix(m)
    if mat.shape[0] != mat.shape[1]:
        return False
    return bool(np.max(np.abs(mat - mat.conj().T)) <= tol)


def assert_hermitian(m, tol: float = TAU_EQ) -> np.ndarray:
    mat = as_matrix(m)
    if not is_hermitian(mat, tol):
        raise ValueError("matrix is not Hermitian within tolerance")
    return mat


def assert_state_vector(psi, tol: float = TAU_EQ) -> np.ndarray:
    """Validate a unit-norm state vector at desk scale (dim 2 to 8).

    Qubit-system operations (dim 2, 4 or 8) enforce their exact dimension
    at the call site; ensemble reconstruction also runs in dimension 3.
    """
    vec = np.asarray(psi, dtype=complex).reshape(-1)
    if not 2 <= vec.shape[0] <= 8:
        raise ValueError(f"state dimension must be between 2 and 8, got {vec.shape[0]}")
    norm_sq = float(np.vdot(vec, vec).real)
    if abs(norm_sq - 1.0) > tol:
        raise ValueError(f"state is not normalized: ||psi||^2 = {norm_sq}")
    return vec


def assert_density_operator(rho, tol: float = TAU_EQ, psd_tol: float = TAU_PSD) -> np.ndarray:
    """Validate Hermiticity, unit trace and positive semidefiniteness."""
    mat = assert_hermitian(rho, tol)
    tr = complex(np.trace(mat))
    if abs(tr - 1.0) > tol:
        raise ValueError(f"density operator trace is {tr}, expected 1")
    evals = np.linalg.eigvalsh(mat)
    if evals.min() < -psd_tol:
        raise ValueError(f"density operator has negative eigenvalue {evals.min()}")
    return mat


def assert_projector(p, tol: float = TAU_EQ) -> np.ndarray:
    mat = assert_hermitian(p, tol)
    if np.max(np.abs(mat @ mat - mat)) > tol:
        raise ValueError("matrix is not idempotent within tolerance")
    return mat


def kron(a, b) -> np.ndarray:
    """Tensor (Kronecker) product of two matrices; dims multiply."""
    return np.kron(as_matrix(a), as_matrix(b))


def sigma_dot(n) -> np.ndarray:
    """n . sigma for a real 3-vector n (not necessarily unit)."""
    n = np.asarray(n, dtype=float).reshape(3)
    return np.einsum("i,ijk->jk", n, PAULIS)


def pauli_obs(alpha: float, beta) -> np.ndarray:
    """Spin-1/2 observable alpha*I + beta . sigma.

    Its two eigenvalues are alpha + |beta| and alpha - |beta|.
    """
    return float(alpha) * ID2 + sigma_dot(beta)


def eig_herm2(h) -> tuple[float, float]:
    """Both eigenvalues of a 2x2 Hermitian matrix, descending.

    Closed form: m +/- sqrt(d^2 + |h01|^2) with m the mean of the diagonal
    and d half the diagonal gap.  Exact to machine precision; rejects
    non-Hermitian input.
    """
    mat = assert_hermitian(h)
    if mat.shape != (2, 2):
        raise ValueError(f"expected a 2x2 matrix, got {mat.shape}")
    m = (mat[0, 0].real + mat[1, 1].real) / 2.0
    d = (mat[0, 0].real - mat[1, 1].real) / 2.0
    q = np.hypot(d, abs(mat[0, 1]))
    return (m + q, m - q)


def eigh_herm(h, tol: float = TAU_EQ) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of a Hermitian matrix (ascending eigenvalues)."""
    mat = assert_hermitian(h, tol)
    evals, evecs = np.linalg.eigh(mat)
    return evals, evecs


def expectation(rho, a) -> float:
    """Tr(rho A) for matching dimensions; the imaginary residue must be tiny."""
    rho = as_matrix(rho)
    a = as_matrix(a)
    if rho.shape != a.shape:
        raise ValueError(f"dimension mismatch: {rho.shape} vs {a.shape}")
    val = complex(np.trace(rho @ a))
    if abs(val.imag) > TAU_EQ:
        raise ValueError(f"expectation has non-negligible imaginary part {val.imag}")
    return val.real


def projector(psi) -> np.ndarray:
    """Rank-1 projector |psi><psi| for a unit-norm state."""
    vec = assert_state_vector(psi)
    return np.outer(vec, vec.conj())


def random_state(rng: np.random.Generator, dim: int) -> np.ndarray:
    """Haar-like random unit state vector."""
    vec = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    return vec / np.linalg.norm(vec)


def random_density(rng: np.random.Generator, dim: int) -> np.ndarray:
    """Random full-rank density operator (normalized Wishart matrix)."""
    g = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real


def random_unit3(rng: np.random.Generator) -> np.ndarray:
    """Uniform random direction on the unit sphere."""
    v = rng.normal(size=3)
    return v / np.linalg.norm(v)


def intersection_projector(p, q, tol: float = TAU_EQ) -> tuple[np.ndarray, int]:
    """Projector onto range(P) & range(Q) and its rank.

    Computed as the projector onto the null space of 2I - P - Q, whose
    zero eigenvectors are exactly the common +1 eigenvectors of P and Q.
    Eigenvalues below TAU_PSD count as zero; genuine nonzero eigenvalues
    in the constructions used here are orders of magnitude larger.
    """
    p = assert_projector(p, tol)
    q = assert_projector(q, tol)
    if p.shape != q.shape:
        raise ValueError(f"dimension mismatch: {p.shape} vs {q.shape}")
    gap = 2.0 * np.eye(p.shape[0], dtype=complex) - p - q
    evals, evecs = np.linalg.eigh(gap)
    null = evecs[:, np.abs(evals) <= TAU_PSD]
    rank = null.shape[1]
    return null @ null.conj().T, rank
