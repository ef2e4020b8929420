"""Gamma matrices, boosts, and the conjugation-closure classifier."""

import math

import numpy as np
import pytest

from ncdirac.clifford import (
    boost_matrix,
    build_majorana_rep,
    gamma,
    gamma5,
    gamma5_product_check,
    majorana_imaginary_check,
    pairing_residual,
    reality_class,
    spinor_generator,
    vector_boost,
    verify_clifford,
)

J = 1j


def test_gamma5_frozen_value():
    expect = np.array(
        [[0, J, 0, 0], [-J, 0, 0, 0], [0, 0, 0, -J], [0, 0, J, 0]]
    )
    assert np.array_equal(gamma5().to_complex_array(), expect)


def test_gamma_entries_imaginary_and_traceless():
    for mu in range(4):
        arr = gamma(mu).to_complex_array()
        assert np.all(arr.real == 0)
        assert arr.trace() == 0


@pytest.mark.parametrize("eps5", [1, -1])
def test_clifford_relations(eps5):
    rep = build_majorana_rep(eps5)
    checks = verify_clifford(rep)
    assert len(checks) == 20
    names = [c.name for c in checks]
    assert sum(n.startswith("anticommutator") for n in names) == 15
    assert sum(n.startswith("square") for n in names) == 5
    for c in checks:
        assert c.ok, c.name
        assert c.residual == 0


@pytest.mark.parametrize("eps5", [1, -1])
def test_gamma4_square_and_metric(eps5):
    rep = build_majorana_rep(eps5)
    g4 = rep.gamma[4]
    square = (g4 @ g4).to_complex_array()
    assert np.array_equal(square, eps5 * np.eye(4))
    assert rep.metric5 == (1, -1, -1, -1, eps5)
    # extra direction: gamma5 itself or its rotation by i
    g5 = gamma5().to_complex_array()
    got = g4.to_complex_array()
    assert np.allclose(got, g5 if eps5 == 1 else J * g5)


@pytest.mark.parametrize("eps5", [1, -1])
def test_product_and_imaginarity(eps5):
    rep = build_majorana_rep(eps5)
    assert gamma5_product_check(rep).ok
    assert majorana_imaginary_check(rep).ok


def test_boost_pairing_rapidity_one():
    omega = np.zeros((4, 4))
    omega[0, 3], omega[3, 0] = 1.0, -1.0
    S = boost_matrix(omega).matrix
    Sinv = np.linalg.inv(S)
    g0 = gamma(0).to_complex_array()
    g3 = gamma(3).to_complex_array()
    boosted = Sinv @ g0 @ S
    expect = math.cosh(1.0) * g0 + math.sinh(1.0) * g3
    assert np.allclose(boosted, expect, atol=1e-12)
    # spinor boosts are real in this basis and unimodular
    assert np.allclose(S.imag, 0, atol=1e-14)
    assert abs(np.linalg.det(S) - 1.0) < 1e-12


def test_vector_boost_preserves_metric():
    rng = np.random.default_rng(5)
    eta = np.diag([1.0, -1.0, -1.0, -1.0])
    for _ in range(20):
        omega = rng.uniform(-1, 1, (4, 4))
        omega = omega - omega.T
        lam = vector_boost(omega)
        assert np.allclose(lam.T @ eta @ lam, eta, atol=1e-10)


def test_pairing_residual_random():
    rng = np.random.default_rng(11)
    for _ in range(25):
        omega = rng.uniform(-1, 1, (4, 4))
        omega = omega - omega.T
        assert pairing_residual(omega) < 1e-10


def test_generator_antisymmetry_guard():
    with pytest.raises(ValueError):
        spinor_generator(np.ones((4, 4)))
    with pytest.raises(ValueError):
        spinor_generator(np.zeros((3, 3)))


class TestRealityClass:
    def test_real_basis_is_majorana(self):
        assert reality_class([(1, 1, 0, 0), (0, 0, 1, -1)]) == "Majorana"

    def test_paired_imaginary_is_dirac(self):
        assert reality_class([(1, 0, J, 0), (0, 1, 0, J)]) == "Dirac"

    def test_complex_span_with_real_form(self):
        # (i, i, 0, 0) spans the same line as (1, 1, 0, 0)
        assert reality_class([(J, J, 0, 0)]) == "Majorana"

    def test_basis_recombination_invariance(self):
        base = [(1, 0, J, 0), (0, 1, 0, J)]
        mixed = [
            tuple(3 * a + (2 + J) * b for a, b in zip(base[0], base[1])),
            tuple((1 - J) * a - 5 * b for a, b in zip(base[0], base[1])),
        ]
        assert reality_class(mixed) == reality_class(base) == "Dirac"

    def test_float_mode_agrees(self):
        noisy = [
            (1.0 + 1e-13, 0.0, 1j, 0.0),
            (0.0, 1.0, 0.0, 1j * (1 + 1e-13)),
        ]
        assert reality_class(noisy) == "Dirac"
        assert reality_class([(1.0, 1.0 + 1e-14, 0.0, 0.0)]) == "Majorana"

    def test_rank_deficient_rejected(self):
        with pytest.raises(ValueError):
            reality_class([(1, 0, 0, 0), (2, 0, 0, 0)])

    def test_full_space_is_majorana(self):
        basis = [tuple(int(i == j) for j in range(4)) for i in range(4)]
        assert reality_class(basis) == "Majorana"
