"""Differential-operator realization of the deformed algebra on 5 variables.

Ground truth for index conventions: the generators act on functions of
xi^0..xi^4 as polynomial coefficient times partial derivative words,

    P_mu   = i d_mu
    M_munu = i (xi_mu d_nu - xi_nu d_mu)
    x_mu   = xi_mu + i l (xi_mu d_4 - eps5 xi^4 d_mu)
    C      = 1 + i l d_4

with xi_mu = eta_munu xi^nu (index lowered) while d_mu = d/dxi^mu stays
unlowered and xi^4 is the raw fifth variable.  The commutators close on the
flat (rho = 0) deformed table; that closure certifies the sign and index
placement used everywhere else in the package.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from .lie_algebra import (
    DEFORMED_BASIS,
    StructureConstants,
    build_deformed_algebra,
    contract,
    eta4,
)
from .scalars import P_I, P_ONE, ParamPoly, poly, sym

NVARS = 5
_ZERO5 = (0,) * NVARS


class WeylOperator:
    """Normal-ordered sum  sum_terms  coeff * xi^alpha * d^beta.

    Keys are (alpha, beta) pairs of 5-tuples; coefficients are ParamPoly.
    Multiplication applies the full normal-ordering contraction

        d^beta xi^gamma = sum_nu prod_c C(beta_c,nu_c) C(gamma_c,nu_c) nu_c!
                            xi^(gamma-nu) d^(beta-nu)
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for key, coeff in terms.items():
                coeff = poly(coeff)
                if coeff.is_zero():
                    continue
                alpha, beta = key
                key = (tuple(alpha), tuple(beta))
                prev = clean.get(key)
                total = coeff if prev is None else prev + coeff
                if total.is_zero():
                    clean.pop(key, None)
                else:
                    clean[key] = total
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @staticmethod
    def unit() -> "WeylOperator":
        return WeylOperator({(_ZERO5, _ZERO5): P_ONE})

    @staticmethod
    def coordinate(a: int) -> "WeylOperator":
        alpha = tuple(1 if i == a else 0 for i in range(NVARS))
        return WeylOperator({(alpha, _ZERO5): P_ONE})

    @staticmethod
    def derivative(a: int) -> "WeylOperator":
        beta = tuple(1 if i == a else 0 for i in range(NVARS))
        return WeylOperator({(_ZERO5, beta): P_ONE})

    # -- linear structure ----------------------------------------------------

    def __add__(self, other) -> "WeylOperator":
        if not isinstance(other, WeylOperator):
            return NotImplemented
        out = dict(self.terms)
        for key, coeff in other.terms.items():
            prev = out.get(key)
            total = coeff if prev is None else prev + coeff
            if total.is_zero():
                out.pop(key, None)
            else:
                out[key] = total
        made = WeylOperator.__new__(WeylOperator)
        made.terms = out
        return made

    def __sub__(self, other) -> "WeylOperator":
        return self + (-other)

    def __neg__(self) -> "WeylOperator":
        made = WeylOperator.__new__(WeylOperator)
        made.terms = {k: -c for k, c in self.terms.items()}
        return made

    def scale(self, factor) -> "WeylOperator":
        f = poly(factor)
        made = WeylOperator.__new__(WeylOperator)
        made.terms = {}
        for key, coeff in self.terms.items():
            c = f * coeff
            if not c.is_zero():
                made.terms[key] = c
        return made

    def __matmul__(self, other) -> "WeylOperator":
        """Operator composition with normal reordering."""
        if not isinstance(other, WeylOperator):
            return NotImplemented
        acc: dict = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                base = c1 * c2
                # contract b1 against a2 componentwise
                ranges = [range(min(x, y) + 1) for x, y in zip(b1, a2)]
                for nu in _product(ranges):
                    weight = 1
                    for bc, ac, nc in zip(b1, a2, nu):
                        weight *= comb(bc, nc) * comb(ac, nc) * factorial(nc)
                    alpha = tuple(x + y - n for x, y, n in zip(a1, a2, nu))
                    beta = tuple(x + y - n for x, y, n in zip(b1, b2, nu))
                    coeff = base * weight
                    key = (alpha, beta)
                    prev = acc.get(key)
                    total = coeff if prev is None else prev + coeff
                    if total.is_zero():
                        acc.pop(key, None)
                    else:
                        acc[key] = total
        made = WeylOperator.__new__(WeylOperator)
        made.terms = acc
        return made

    def commutator(self, other: "WeylOperator") -> "WeylOperator":
        return (self @ other) - (other @ self)

    def substitute(self, bindings) -> "WeylOperator":
        return WeylOperator({k: c.substitute(bindings) for k, c in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeylOperator):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (alpha, beta), coeff in sorted(self.terms.items()):
            factors = []
            for i, e in enumerate(alpha):
                if e:
                    factors.append(f"xi{i}" + (f"^{e}" if e > 1 else ""))
            for i, e in enumerate(beta):
                if e:
                    factors.append(f"d{i}" + (f"^{e}" if e > 1 else ""))
            body = "*".join(factors) if factors else "1"
            parts.append(f"({coeff})*{body}")
        return " + ".join(parts)

    __repr__ = __str__


def _product(ranges):
    if not ranges:
        yield ()
        return
    head, *tail = ranges
    for x in head:
        for rest in _product(tail):
            yield (x,) + rest


def _xi_lower(mu: int) -> WeylOperator:
    return WeylOperator.coordinate(mu).scale(eta4(mu, mu))


def build_rep(eps5: int, ell: ParamPoly | None = None) -> dict:
    """Generator name -> WeylOperator.  Symbolic in l unless a value is given."""
    if eps5 not in (1, -1):
        raise ValueError("eps5 must be +1 or -1")
    ell = sym("l") if ell is None else poly(ell)
    i = P_I
    rep = {}
    for mu in range(4):
        rep[f"P{mu}"] = WeylOperator.derivative(mu).scale(i)
    for mu in range(4):
        for nu in range(mu + 1, 4):
            op = (_xi_lower(mu) @ WeylOperator.derivative(nu)) - (
                _xi_lower(nu) @ WeylOperator.derivative(mu)
            )
            rep[f"M{mu}{nu}"] = op.scale(i)
    xi4 = WeylOperator.coordinate(4)
    d4 = WeylOperator.derivative(4)
    for mu in range(4):
        correction = (_xi_lower(mu) @ d4) - (xi4 @ WeylOperator.derivative(mu)).scale(eps5)
        rep[f"x{mu}"] = _xi_lower(mu) + correction.scale(i * ell)
    rep["C"] = WeylOperator.unit() + d4.scale(i * ell)
    return rep


def weyl_commutator(a: WeylOperator, b: WeylOperator) -> WeylOperator:
    return a.commutator(b)


_FAMILY_OF = {"M": "M", "P": "P", "x": "x", "C": "C"}

# the eight bracket lines of the deformed table; pairs outside them
# ([M, C] and C with itself) are swept inside the MM family
BRACKET_FAMILIES = ("MM", "MP", "Mx", "PP", "Px", "PC", "xx", "xC")


def _family(name_a: str, name_b: str) -> str:
    fa, fb = _FAMILY_OF[name_a[0]], _FAMILY_OF[name_b[0]]
    order = {"M": 0, "P": 1, "x": 2, "C": 3}
    if order[fa] > order[fb]:
        fa, fb = fb, fa
    fam = fa + fb
    if fam in ("MC", "CC"):
        return "MM"
    return fam


def verify_rep_closure(eps5: int):
    """Residuals rep([a,b]) - [rep a, rep b] for every generator pair.

    Returns dict family -> list of (pair names, residual WeylOperator); the
    representation is faithful to the flat table iff every residual is zero.
    """
    rep = build_rep(eps5)
    table = contract(build_deformed_algebra(1, eps5), rho_to_zero=True)
    names = DEFORMED_BASIS
    out = {fam: [] for fam in BRACKET_FAMILIES}
    for idx_a in range(len(names)):
        for idx_b in range(idx_a + 1, len(names)):
            a, b = names[idx_a], names[idx_b]
            lhs = weyl_commutator(rep[a], rep[b])
            rhs = WeylOperator()
            for k, coeff in table.bracket(idx_a, idx_b).items():
                rhs = rhs + rep[names[k]].scale(coeff)
            out[_family(a, b)].append(((a, b), lhs - rhs))
    return out


def closure_holds(eps5: int) -> bool:
    return all(
        residual.is_zero()
        for rows in verify_rep_closure(eps5).values()
        for _, residual in rows
    )
