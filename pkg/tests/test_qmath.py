import numpy as np
import pytest

from hvlab.qmath import (
    ID2,
    SIGMA_X,
    SIGMA_Z,
    TAU_EQ,
    eig_herm2,
    expectation,
    intersection_projector,
    kron,
    pauli_obs,
    projector,
    random_density,
    random_state,
    random_unit3,
    sigma_dot,
)
from hvlab.nonlocality import singlet_state


def kron_bruteforce(a, b):
    """Independent index-arithmetic oracle for the tensor product."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    out = np.zeros((a.shape[0] * b.shape[0], a.shape[1] * b.shape[1]), dtype=complex)
    for i in range(a.shape[0]):
        for j in range(a.shape[1]):
            for k in range(b.shape[0]):
                for l in range(b.shape[1]):
                    out[i * b.shape[0] + k, j * b.shape[1] + l] = a[i, j] * b[k, l]
    return out


class TestKron:
    def test_identity_case(self):
        assert np.array_equal(kron(ID2, ID2), np.eye(4))

    def test_sigma_x_squared_entries(self):
        m = kron(SIGMA_X, SIGMA_X)
        assert m[0, 3] == 1
        assert m[0, 0] == 0

    def test_matches_bruteforce_oracle(self):
        assert np.array_equal(kron(SIGMA_Z, SIGMA_X), kron_bruteforce(SIGMA_Z, SIGMA_X))
        rng = np.random.default_rng(0)
        for _ in range(20):
            a = rng.normal(size=(2, 3)) + 1j * rng.normal(size=(2, 3))
            b = rng.normal(size=(3, 2)) + 1j * rng.normal(size=(3, 2))
            assert np.allclose(kron(a, b), kron_bruteforce(a, b), atol=1e-14)

    def test_associativity(self):
        rng = np.random.default_rng(1)
        for _ in range(20):
            a, b, c = (rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2)) for _ in range(3))
            assert np.allclose(kron(kron(a, b), c), kron(a, kron(b, c)), atol=1e-13)


class TestPauliObs:
    def test_z_direction(self):
        assert np.allclose(pauli_obs(0, (0, 0, 1)), SIGMA_Z, atol=1e-15)
        assert eig_herm2(pauli_obs(0, (0, 0, 1))) == (1.0, -1.0)

    def test_eigenvalues_alpha_plus_minus_beta(self):
        rng = np.random.default_rng(2)
        for _ in range(10**4):
            alpha = rng.normal()
            beta = rng.normal(size=3)
            hi, lo = eig_herm2(pauli_obs(alpha, beta))
            blen = np.linalg.norm(beta)
            assert abs(hi - (alpha + blen)) <= 1e-10
            assert abs(lo - (alpha - blen)) <= 1e-10

    def test_x_plus_y_eigenvalues(self):
        hi, lo = eig_herm2(pauli_obs(0, (1, 1, 0)))
        assert abs(hi - np.sqrt(2)) <= 1e-12
        assert abs(lo + np.sqrt(2)) <= 1e-12


class TestEigHerm2:
    def test_identity(self):
        assert eig_herm2(ID2) == (1.0, 1.0)

    def test_characteristic_polynomial_oracle(self):
        rng = np.random.default_rng(3)
        for _ in range(200):
            h = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
            h = h + h.conj().T
            tr = np.trace(h).real
            det = np.linalg.det(h).real
            for lam in eig_herm2(h):
                assert abs(lam**2 - tr * lam + det) <= 1e-9 * max(1.0, abs(det))

    def test_rejects_non_hermitian(self):
        with pytest.raises(ValueError):
            eig_herm2(np.array([[0, 1], [0, 0]], dtype=complex))

    def test_rejects_wrong_shape(self):
        with pytest.raises(ValueError):
            eig_herm2(np.eye(3))


class TestExpectation:
    def test_maximally_mixed_z(self):
        assert expectation(ID2 / 2, SIGMA_Z) == 0

    def test_pure_zero_state(self):
        assert abs(expectation(np.diag([1, 0]).astype(complex), SIGMA_Z) - 1) <= 1e-15

    def test_singlet_anticorrelation(self):
        rho = projector(singlet_state())
        rng = np.random.default_rng(4)
        for _ in range(100):
            a, b = random_unit3(rng), random_unit3(rng)
            op = kron(sigma_dot(a), sigma_dot(b))
            assert abs(expectation(rho, op) + np.dot(a, b)) <= 1e-12

    def test_linearity_in_observable(self):
        rng = np.random.default_rng(5)
        for _ in range(100):
            rho = random_density(rng, 3)
            a = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
            a = a + a.conj().T
            b = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
            b = b + b.conj().T
            x, y = rng.normal(size=2)
            lhs = expectation(rho, x * a + y * b)
            rhs = x * expectation(rho, a) + y * expectation(rho, b)
            assert abs(lhs - rhs) <= 1e-10

    def test_dim_mismatch(self):
        with pytest.raises(ValueError):
            expectation(ID2 / 2, np.eye(4))


class TestProjector:
    def test_zero_state(self):
        assert np.array_equal(projector([1, 0]), np.diag([1, 0]).astype(complex))

    def test_idempotent_unit_trace(self):
        rng = np.random.default_rng(6)
        for dim in (2, 4, 8):
            psi = random_state(rng, dim)
            p = projector(psi)
            assert np.max(np.abs(p @ p - p)) <= TAU_EQ
            assert abs(np.trace(p) - 1) <= TAU_EQ
            assert np.max(np.abs(p - p.conj().T)) <= TAU_EQ

    def test_rejects_unnormalized(self):
        with pytest.raises(ValueError):
            projector([1, 1])


class TestIntersectionProjector:
    def test_self_intersection(self):
        p = projector([1, 0])
        out, rank = intersection_projector(p, p)
        assert rank == 1
        assert np.allclose(out, p, atol=1e-12)

    def test_with_identity(self):
        rng = np.random.default_rng(7)
        p = projector(random_state(rng, 4))
        out, rank = intersection_projector(p, np.eye(4, dtype=complex))
        assert rank == 1
        assert np.allclose(out, p, atol=1e-10)

    def test_distinct_spin_directions_are_disjoint(self):
        a = np.array([0.0, 0.0, 1.0])
        b = np.array([1.0, 0.0, 0.0])
        p = 0.5 * (ID2 + sigma_dot(a))
        q = 0.5 * (ID2 + sigma_dot(b))
        out, rank = intersection_projector(p, q)
        assert rank == 0
        assert np.max(np.abs(out)) <= 1e-12

    def test_rejects_non_projector(self):
        with pytest.raises(ValueError):
            intersection_projector(SIGMA_X, SIGMA_X)


def test_constructed_observables_are_hermitian():
    rng = np.random.default_rng(8)
    for _ in range(100):
        m = pauli_obs(rng.normal(), rng.normal(size=3))
        assert np.max(np.abs(m - m.conj().T)) <= TAU_EQ
