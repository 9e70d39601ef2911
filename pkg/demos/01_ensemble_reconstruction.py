"""Rebuilding a density operator from expectation values, and why no
ensemble can be dispersion-free.

A linear expectation functional <.> answered on the dim^2 basis observables
U_nn, V_nm, W_nm pins down the density operator entry by entry.  The same
linearity dooms dispersion-free ensembles: <phi|rho|phi> would have to be
0 or 1 for every phi, but it varies continuously along any rotation arc.
"""

import numpy as np

import hvlab as hl

rng = np.random.default_rng(7)

print("=== reconstruction from an expectation oracle ===")
rho = hl.qmath.random_density(rng, 3)
oracle = hl.oracle_from_density(rho)
rebuilt = hl.reconstruct_density(oracle)
print(f"dim 3 state, {oracle.dim**2} oracle queries")
print(f"max entrywise error: {np.max(np.abs(rebuilt - rho)):.3e}")

print()
print("=== probabilities vary continuously, so 0-or-1 everywhere is impossible ===")
evals, evecs = np.linalg.eigh(rho)
thetas, values = hl.dispersion_scan(rho, evecs[:, -1], evecs[:, 0], steps=9)
for theta, value in zip(thetas, values):
    bar = "#" * int(round(40 * value))
    print(f"  theta = {theta:4.2f}   <phi|rho|phi> = {value:.4f}  {bar}")

phi = hl.dispersion_free_witness(rho)
val = float(np.vdot(phi, rho @ phi).real)
print(f"witness state has probability {val:.4f}, strictly between 0 and 1")

print()
print("=== homogeneous ensembles are exactly the pure states ===")
for label, candidate in [
    ("pure |0><0|", np.diag([1.0, 0, 0]).astype(complex)),
    ("mixture 0.9/0.1", np.diag([0.9, 0.1, 0.0]).astype(complex)),
    ("random full-rank", rho),
]:
    pure, rank = hl.homogeneity_check(candidate)
    purity = np.trace(candidate @ candidate).real
    print(f"  {label:18s} homogeneous = {str(pure):5s}  rank {rank}  Tr(rho^2) = {purity:.4f}")

print()
print("=== two spin directions cannot both carry definite 0/1 values ===")
report = hl.jauch_piron_contradiction((0, 0, 1), (1, 0, 0))
print(f"projector pairs resolve identity to {report.completeness_dev:.1e}")
print(f"cross intersection ranks: {report.cross_ranks}  (all zero)")
print(report.statement)
