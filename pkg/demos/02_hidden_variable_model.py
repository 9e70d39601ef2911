"""The explicit hidden-variable model for a single spin-1/2.

Each dispersion-free state (psi, lambda) assigns one definite eigenvalue to
every observable alpha*I + beta.sigma, yet averaging uniformly over lambda
returns exactly the quantum expectation.  The catch: values are not
additive across noncommuting observables, which is the loophole in the
linearity assumption of the classic impossibility proof.
"""

import numpy as np

import hvlab as hl

KET0 = np.array([1.0, 0.0], dtype=complex)

print("=== definite values, one eigenvalue at a time ===")
alpha, beta = 0.0, np.array([1.0, 0.0, 0.0])
for lam in (-0.5, -0.25, -0.05, 0.05, 0.25, 0.5):
    val = hl.bell_hv_value(alpha, beta, hl.BellHVState(KET0, lam))
    print(f"  lambda = {lam:+.2f}  ->  value {val:+.0f}")

print()
print("=== uniform lambda average = quantum expectation ===")
rng = np.random.default_rng(12)
for _ in range(4):
    alpha = rng.normal()
    beta = rng.normal(size=3)
    psi = hl.qmath.random_state(rng, 2)
    exact = hl.bell_hv_average_exact(alpha, beta, psi)
    quantum = alpha + hl.expectation(hl.projector(psi), hl.pauli_obs(0.0, beta))
    est, err = hl.bell_hv_average_mc(alpha, beta, psi, 10**5, seed=3)
    print(
        f"  exact {exact:+.6f}   quantum {quantum:+.6f}   "
        f"MC {est:+.6f} +- {err:.6f}"
    )

print()
print("=== eigenvalues do not add across noncommuting observables ===")
x_hi, x_lo = hl.eig_herm2(hl.SIGMA_X)
y_hi, y_lo = hl.eig_herm2(hl.SIGMA_Y)
s_hi, s_lo = hl.eig_herm2(hl.pauli_obs(0, (1, 1, 0)))
print(f"eig(sigma_x) = {{{x_hi:+.0f}, {x_lo:+.0f}}}, eig(sigma_y) = {{{y_hi:+.0f}, {y_lo:+.0f}}}")
print(f"possible sums: {{+2, 0, -2}}")
print(f"eig(sigma_x + sigma_y) = {{{s_hi:+.6f}, {s_lo:+.6f}}}  <- not sums of eigenvalues")
