"""Differential-operator realization closes on the flat-momentum algebra."""

import pytest

from ncdirac.lie_algebra import build_deformed_algebra, contract
from ncdirac.scalars import ExactScalar, poly, sym
from ncdirac.weyl import (
    BRACKET_FAMILIES,
    WeylOperator,
    build_rep,
    closure_holds,
    verify_rep_closure,
    weyl_commutator,
)

FAMILY_SIZES = {
    "MM": 21, "MP": 24, "Mx": 24, "PP": 6, "Px": 16, "PC": 4, "xx": 6, "xC": 4,
}


@pytest.mark.parametrize("eps5", [1, -1])
def test_closure_all_families(eps5):
    table = verify_rep_closure(eps5)
    assert set(table) == set(BRACKET_FAMILIES)
    for family, rows in table.items():
        assert len(rows) == FAMILY_SIZES[family]
        for (a, b), remainder in rows:
            assert remainder.is_zero(), f"[{a},{b}] fails for eps5={eps5}"
    assert sum(FAMILY_SIZES.values()) == 105
    assert closure_holds(eps5)


@pytest.mark.parametrize("eps5", [1, -1])
def test_operator_shapes(eps5):
    rep = build_rep(eps5)
    i = ExactScalar.i()
    # momentum is a pure derivative, the central element a shifted derivative
    assert rep["P2"] == WeylOperator.derivative(2).scale(poly(i))
    assert rep["C"] == WeylOperator.unit() + WeylOperator.derivative(4).scale(
        poly(i) * sym("l")
    )
    # coordinate operator: lowered-index multiplication plus an l-sized
    # rotation into the extra direction; eta11 = -1 flips the first two terms
    expected_x1 = (
        WeylOperator.coordinate(1).scale(poly(-1))
        + (WeylOperator.coordinate(1) @ WeylOperator.derivative(4)).scale(
            poly(-i) * sym("l")
        )
        - (WeylOperator.coordinate(4) @ WeylOperator.derivative(1)).scale(
            poly(i * eps5) * sym("l")
        )
    )
    assert rep["x1"] == expected_x1


@pytest.mark.parametrize("eps5", [1, -1])
def test_commutators_match_flat_table(eps5):
    rep = build_rep(eps5)
    i = ExactScalar.i()
    got = weyl_commutator(rep["P0"], rep["x0"])
    assert (got - rep["C"].scale(poly(i))).is_zero()
    got = weyl_commutator(rep["x0"], rep["x1"])
    assert (got - rep["M01"].scale(poly(-i * eps5) * sym("l", 2))).is_zero()
    # momenta commute in the flat-momentum realization
    assert weyl_commutator(rep["P0"], rep["P3"]).is_zero()
    got = weyl_commutator(rep["x0"], rep["C"])
    assert (got - rep["P0"].scale(poly(i * eps5) * sym("l", 2))).is_zero()


@pytest.mark.parametrize("eps5", [1, -1])
def test_target_is_flat_contraction(eps5):
    # the closure target table equals the rho -> 0 limit of the full algebra,
    # so the realization represents the tangent-space algebra, not the full one
    flat = contract(build_deformed_algebra(1, eps5), rho_to_zero=True)
    ix = {n: k for k, n in enumerate(flat.basis)}
    assert not flat.bracket(ix["P0"], ix["P1"])
    assert flat.bracket(ix["x0"], ix["x1"])


def test_ell_to_zero_restores_multiplication_operator():
    rep = build_rep(-1)
    collapsed = rep["x3"].substitute({"l": poly(0)})
    # lowered index: eta33 = -1
    assert collapsed == WeylOperator.coordinate(3).scale(poly(-1))
    collapsed_c = rep["C"].substitute({"l": poly(0)})
    assert collapsed_c == WeylOperator.unit()


def test_weyl_product_is_associative_on_samples():
    rep = build_rep(1)
    a, b, c = rep["x0"], rep["M01"], rep["C"]
    assert ((a @ b) @ c - a @ (b @ c)).is_zero()
