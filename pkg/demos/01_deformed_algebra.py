"""Walk through the deformed algebra: brackets, Jacobi, and the 6-D match.

Run from the repository root:  python3 demos/01_deformed_algebra.py
"""

from ncdirac import (
    build_deformed_algebra,
    contract,
    jacobi_residual,
    solve_isomorphism_scalings,
    verify_linear_isomorphism,
)

print("== structure constants ==")
alg = build_deformed_algebra(1, -1)
names = alg.basis
for a, b in [("P0", "x0"), ("P0", "P1"), ("x0", "x1"), ("x0", "C")]:
    combo = alg.bracket(names.index(a), names.index(b))
    shown = {names[i]: str(c) for i, c in combo.items()} or "0"
    print(f"  [{a}, {b}] = {shown}")

print("\n== Jacobi identity, all sign choices ==")
for eps4 in (1, -1):
    for eps5 in (1, -1):
        table = build_deformed_algebra(eps4, eps5)
        bad = jacobi_residual(table)
        print(f"  eps4={eps4:+d} eps5={eps5:+d}: {len(bad)} violations "
              f"out of 455 triples")

print("\n== embedding into the 6-D orthogonal algebra ==")
sol = solve_isomorphism_scalings(1, -1)
print(f"  P -> alpha*M_mu4 with alpha = {sol.alpha}")
print(f"  x -> beta*M_mu5 with beta = {sol.beta}")
print(f"  C -> gamma*M45 with gamma = {sol.gamma}")
check = verify_linear_isomorphism(sol.map)
print(f"  exact isomorphism: {check.ok}, invertible: {check.invertible}")
print(f"  sign choices that extend: {sorted(sol.passing_sign_choices)}")

print("\n== contractions ==")
flat = contract(alg, rho_to_zero=True)
pp = flat.bracket(names.index("P0"), names.index("P1"))
print(f"  rho -> 0: [P0, P1] = {pp or 0} (momenta commute again)")
flat2 = contract(alg, ell_to_zero=True)
xx = flat2.bracket(names.index("x0"), names.index("x1"))
print(f"  l -> 0: [x0, x1] = {xx or 0} (coordinates commute again)")
