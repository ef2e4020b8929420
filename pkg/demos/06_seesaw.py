"""Seesaw splitting: coupling the massless branch to the heavy one.

A Yukawa coupling g<phi> between the two branches leaves an almost-massless
state with m = |g|^2 <phi>^2 l / 2, suppressed by the heavy scale M = 2/l.
The exact 8x8 spectrum converges to this quadratically in mu/M.

Run:  python3 demos/06_seesaw.py
"""

from fractions import Fraction

from ncdirac import CouplingConfig, exact_mode_spectrum, verify_effective_equation
from ncdirac.scalars import ExactScalar
from ncdirac.seesaw import leading_mass

for eps5 in (-1, 1):
    print(f"== eps5 = {eps5:+d} ==")
    for ratio in (Fraction(1, 10), Fraction(1, 100), Fraction(1, 1000)):
        config = CouplingConfig(
            g=ExactScalar(Fraction(1)), vev=2 * ratio, ell=Fraction(1), eps5=eps5
        )
        spectrum = exact_mode_spectrum(config)
        print(f"  mu/M = {str(ratio):>6}: leading m = {leading_mass(config)}, "
              f"deviation {spectrum.deviation:.3e} "
              f"(~ (mu/M)^2 = {float(ratio) ** 2:.0e}), "
              f"light k^2 {spectrum.light_k2:+.3e} [{spectrum.light_class}]")

    config = CouplingConfig(
        g=ExactScalar.parse("3/5+4/5i"), vev=Fraction(1, 10), ell=Fraction(1),
        eps5=eps5,
    )
    check = verify_effective_equation(config)
    print(f"  effective equation exact: {check.identity_ok} "
          f"(complex coupling of unit modulus)")

    free = CouplingConfig(
        g=ExactScalar(Fraction(0)), vev=Fraction(1), ell=Fraction(1), eps5=eps5
    )
    spectrum = exact_mode_spectrum(free)
    print(f"  g = 0 decoupling: heavy k^2 = {spectrum.heavy_k2_exact} exactly\n")
