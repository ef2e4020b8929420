"""Light/heavy mass splitting from the coupled 8x8 operator."""

import math
from fractions import Fraction

import numpy as np
import pytest

from ncdirac.clifford import build_majorana_rep, gamma, gamma5
from ncdirac.matrices import ExactMatrix
from ncdirac.scalars import ExactScalar, poly, sym
from ncdirac.seesaw import (
    CouplingConfig,
    RootFindingError,
    coupled_matrix,
    exact_mode_spectrum,
    leading_mass,
    leading_order_reduction,
    light_mass_leading,
    verify_effective_equation,
)


def closed_form_light_mass(eps5: int, big_m: float, mu: float) -> float:
    # light branch of ((E^2 - mu^2)^2 - E^2 M^2) resp. its spacelike twin
    if eps5 == -1:
        return (math.sqrt(big_m**2 + 4 * mu**2) - big_m) / 2
    return (big_m - math.sqrt(big_m**2 - 4 * mu**2)) / 2


def numeric_light_root(eps5: int, ell: float, mu: float) -> float:
    """The determinant is a perfect square, so bisection has nothing to
    bracket.  Instead: D8(s) = s*B + A with B = blockdiag(g, g) invertible,
    so the roots are the eigenvalues of -B^-1 A.  Independent of the exact
    spectrum code path."""
    big_m = 2.0 / ell
    g4 = gamma5().to_complex_array() * (1 if eps5 == 1 else 1j)
    g = gamma(0).to_complex_array() if eps5 == -1 else -gamma(3).to_complex_array()
    zero = np.zeros((4, 4))
    a = np.vstack(
        [np.hstack([zero, mu * np.eye(4)]),
         np.hstack([mu * np.eye(4), big_m * g4])]
    )
    b = np.vstack([np.hstack([g, zero]), np.hstack([zero, g])])
    roots = np.linalg.eigvals(-np.linalg.solve(b, a))
    positive = sorted(r.real for r in roots if r.real > 1e-12 and abs(r.imag) < 1e-9)
    return positive[0]


@pytest.mark.parametrize("eps5", [1, -1])
def test_exact_spectrum_against_independent_root(eps5):
    ell, mu = 1.0, 0.05
    config = CouplingConfig(
        g=ExactScalar(Fraction(1, 20)), vev=Fraction(1), ell=Fraction(1), eps5=eps5
    )
    spectrum = exact_mode_spectrum(config)
    light = math.sqrt(abs(spectrum.light_k2))
    independent = numeric_light_root(eps5, ell, mu)
    assert abs(light - independent) < 1e-10
    closed = closed_form_light_mass(eps5, 2.0, mu)
    assert abs(light - closed) < 1e-12
    # sign of k^2 decides the light particle type
    assert spectrum.light_k2 > 0 if eps5 == -1 else spectrum.light_k2 < 0
    assert spectrum.light_class == ("Dirac" if eps5 == -1 else "Majorana")


@pytest.mark.parametrize(
    "eps5,frozen",
    [
        (-1, {Fraction(1, 10): 9.805e-3, Fraction(1, 100): 9.998e-5,
              Fraction(1, 1000): 1.000e-6}),
        (1, {Fraction(1, 10): 1.021e-2, Fraction(1, 100): 1.000e-4,
             Fraction(1, 1000): 1.000e-6}),
    ],
)
def test_quadratic_deviation_scaling(eps5, frozen):
    for ratio, expected in frozen.items():
        config = CouplingConfig(
            g=ExactScalar(Fraction(1)), vev=2 * ratio, ell=Fraction(1), eps5=eps5
        )
        spectrum = exact_mode_spectrum(config)
        assert spectrum.deviation == pytest.approx(expected, rel=1e-3)
        scaling = spectrum.deviation / float(ratio) ** 2
        assert scaling <= 2.0


@pytest.mark.parametrize("eps5", [1, -1])
def test_coupling_phase_invariance(eps5):
    plain = CouplingConfig(
        g=ExactScalar(Fraction(1)), vev=Fraction(1, 10), ell=Fraction(1), eps5=eps5
    )
    rotated = CouplingConfig(
        g=ExactScalar.parse("3/5+4/5i"), vev=Fraction(1, 10), ell=Fraction(1),
        eps5=eps5,
    )
    assert rotated.coupling_squared() == 1
    a = exact_mode_spectrum(plain)
    b = exact_mode_spectrum(rotated)
    assert a.light_k2 == pytest.approx(b.light_k2, rel=1e-12)
    assert a.heavy_k2 == pytest.approx(b.heavy_k2, rel=1e-12)


def test_root_symmetry():
    config = CouplingConfig(
        g=ExactScalar(Fraction(1)), vev=Fraction(1, 10), ell=Fraction(1), eps5=-1
    )
    spectrum = exact_mode_spectrum(config)
    roots = sorted(spectrum.roots)
    assert len(roots) == 4
    assert roots[0] == pytest.approx(-roots[3], rel=1e-12)
    assert roots[1] == pytest.approx(-roots[2], rel=1e-12)


def test_leading_mass_example():
    config = CouplingConfig(
        g=ExactScalar(Fraction(2)), vev=Fraction(3), ell=Fraction(1, 100), eps5=1
    )
    assert leading_mass(config) == Fraction(9, 50)
    k2, cls = light_mass_leading(config)
    assert k2 == Fraction(-81, 2500)  # -0.0324
    assert cls == "Majorana"


def test_leading_mass_timelike_counterpart():
    config = CouplingConfig(
        g=ExactScalar(Fraction(2)), vev=Fraction(3), ell=Fraction(1, 100), eps5=-1
    )
    k2, cls = light_mass_leading(config)
    assert k2 == Fraction(81, 2500)
    assert cls == "Dirac"


@pytest.mark.parametrize("eps5", [1, -1])
def test_heavy_block_elimination(eps5):
    config = CouplingConfig(
        g=ExactScalar.parse("1/3-2i"), vev=Fraction(5, 7), ell=Fraction(2, 3),
        eps5=eps5,
    )
    w, _effective = leading_order_reduction(config)
    # rest-frame defining equation: gbar*v + (M g4) W = 0 with M = 2/l
    g4 = build_majorana_rep(eps5).gamma[4]
    gbar_v = config.g_exact().conjugate() * ExactScalar(config.vev)
    big_m = ExactScalar(Fraction(2) / config.ell)
    lhs = ExactMatrix.identity(4).scale(poly(gbar_v)) + g4.scale(poly(big_m)) @ w
    assert lhs.is_zero()


@pytest.mark.parametrize("eps5", [1, -1])
def test_effective_equation_identity(eps5):
    config = CouplingConfig(
        g=ExactScalar.parse("1+1i"), vev=Fraction(1, 4), ell=Fraction(1, 3),
        eps5=eps5,
    )
    check = verify_effective_equation(config)
    assert check.identity_ok
    assert check.residual.is_zero()
    _, cls = light_mass_leading(config)
    assert check.rest_frame_class == cls


def test_decoupling_at_zero_coupling():
    config = CouplingConfig(
        g=ExactScalar(Fraction(0)), vev=Fraction(1), ell=Fraction(1, 2), eps5=-1
    )
    spectrum = exact_mode_spectrum(config)
    assert spectrum.heavy_k2_exact == Fraction(16)
    assert spectrum.light_k2_exact == Fraction(0)
    assert spectrum.deviation == 0.0


def test_symbolic_determinant_factorization():
    # det of the 8x8 at k = (E,0,0,0) is the square of a quartic in E
    config = CouplingConfig(
        g=ExactScalar(Fraction(1)), vev=Fraction(1, 5), ell=Fraction(1, 2), eps5=-1
    )
    e = sym("k0")
    mat = coupled_matrix((e, 0, 0, 0), config)
    det = mat.det()
    mu2 = Fraction(1, 25)
    big_m2 = Fraction(16)
    quartic = (e * e - mu2) ** 2 - e * e * big_m2
    assert det == quartic * quartic


def test_overcritical_coupling_raises():
    # eps5 = +1 light root turns complex past mu/M = 1/2
    config = CouplingConfig(
        g=ExactScalar(Fraction(1)), vev=Fraction(3, 2), ell=Fraction(1), eps5=1
    )
    with pytest.raises(RootFindingError) as err:
        exact_mode_spectrum(config)
    assert err.value.diagnostics
