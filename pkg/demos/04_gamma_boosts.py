"""Imaginary gamma matrices, both signatures, and paired boosts.

Run:  python3 demos/04_gamma_boosts.py
"""

import numpy as np

from ncdirac import build_majorana_rep, verify_clifford
from ncdirac.clifford import boost_matrix, pairing_residual, vector_boost

for eps5 in (-1, 1):
    rep = build_majorana_rep(eps5)
    checks = verify_clifford(rep)
    failed = [c.name for c in checks if not c.ok]
    sig = "(3,2)" if eps5 == 1 else "(4,1)"
    print(f"eps5={eps5:+d}: Clifford algebra of signature {sig}, "
          f"{len(checks)} relations, failures: {failed or 'none'}")
    g4 = rep.gamma[4].to_complex_array()
    print(f"  gamma4 squared = {np.round((g4 @ g4)[0, 0].real, 12)} * Id")

print("\n== a rapidity-1 boost along z ==")
omega = np.zeros((4, 4))
omega[0, 3], omega[3, 0] = 1.0, -1.0
S = boost_matrix(omega).matrix
lam = vector_boost(omega)
print("  vector matrix Lambda:")
for row in lam:
    print("   ", np.round(row, 6))
print(f"  cosh(1) = {np.cosh(1):.6f}, sinh(1) = {np.sinh(1):.6f}")
print(f"  spinor matrix is real: {np.allclose(S.imag, 0)}")
print(f"  det S = {np.linalg.det(S).real:.12f}")
print(f"  pairing residual |S^-1 g S - Lambda g|: {pairing_residual(omega):.3e}")

print("\n== random rapidities ==")
rng = np.random.default_rng(0)
worst = 0.0
for _ in range(50):
    w = rng.uniform(-1, 1, (4, 4))
    w = w - w.T
    worst = max(worst, pairing_residual(w))
print(f"  worst residual over 50 draws: {worst:.3e}")
