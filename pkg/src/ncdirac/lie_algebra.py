"""Structure constants for the two-parameter deformed kinematical algebra.

The algebra has 15 generators: six Lorentz rotations M_munu, four momenta
P_mu, four coordinates x_mu and one central-limit element C (the operator
that replaces the Heisenberg unit; [P_mu, x_nu] = i eta_munu C).  The two
deformation parameters enter as rho = 1/R^2 (curvature) and l^2 (length
squared), each weighted by a sign eps4, eps5 = +-1.

The same 15 generators span a pseudo-orthogonal algebra in six dimensions
with metric diag(1,-1,-1,-1,eps4,eps5); ``solve_isomorphism_scalings`` finds
the exact rescalings P_mu -> alpha*M_mu4, x_mu -> beta*M_mu5, C -> gamma*M_45
identifying the two.  Matching [P,P] forces alpha^2 = rho, so the solution
uses the symbol r with rho = r^2 substituted into the deformed table first.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .scalars import (
    ExactScalar,
    P_I,
    P_ONE,
    ParamPoly,
    poly,
    sym,
)

I = P_I

M_LABELS = ("M01", "M02", "M03", "M12", "M13", "M23")
P_LABELS = ("P0", "P1", "P2", "P3")
X_LABELS = ("x0", "x1", "x2", "x3")
C_LABEL = "C"
DEFORMED_BASIS = M_LABELS + P_LABELS + X_LABELS + (C_LABEL,)

_M_PAIRS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
_M_INDEX = {pair: i for i, pair in enumerate(_M_PAIRS)}


def eta4(mu: int, nu: int) -> Fraction:
    """Minkowski metric diag(1,-1,-1,-1)."""
    if mu != nu:
        return Fraction(0)
    return Fraction(1) if mu == 0 else Fraction(-1)


Combo = dict  # generator index -> ParamPoly coefficient


def _combo_add(acc: Combo, idx: int, coeff: ParamPoly):
    if coeff.is_zero():
        return
    prev = acc.get(idx)
    total = coeff if prev is None else prev + coeff
    if total.is_zero():
        acc.pop(idx, None)
    else:
        acc[idx] = total


def combo_sum(*combos: Combo) -> Combo:
    out: Combo = {}
    for combo in combos:
        for idx, coeff in combo.items():
            _combo_add(out, idx, coeff)
    return out


def combo_scale(combo: Combo, factor) -> Combo:
    f = poly(factor)
    out: Combo = {}
    for idx, coeff in combo.items():
        _combo_add(out, idx, f * coeff)
    return out


@dataclass
class StructureConstants:
    """Antisymmetric bracket table over a named basis.

    ``brackets`` stores only i < j; bracket(j, i) is the negation and
    bracket(i, i) is empty.  Coefficients are ParamPoly, so a table can be
    fully symbolic in the deformation parameters.
    """

    basis: tuple
    brackets: dict = field(default_factory=dict)

    def __post_init__(self):
        self.basis = tuple(self.basis)
        self.index = {name: i for i, name in enumerate(self.basis)}

    def set_bracket(self, i: int, j: int, combo: Combo):
        if i == j:
            raise ValueError("bracket of a generator with itself is zero")
        if i > j:
            i, j = j, i
            combo = combo_scale(combo, -1)
        clean = {k: c for k, c in combo.items() if not c.is_zero()}
        if clean:
            self.brackets[(i, j)] = clean
        else:
            self.brackets.pop((i, j), None)

    def bracket(self, i: int, j: int) -> Combo:
        if i == j:
            return {}
        if i < j:
            return dict(self.brackets.get((i, j), {}))
        return combo_scale(self.brackets.get((j, i), {}), -1)

    def bracket_combos(self, a: Combo, b: Combo) -> Combo:
        out: Combo = {}
        for ia, ca in a.items():
            for ib, cb in b.items():
                for k, c in self.bracket(ia, ib).items():
                    _combo_add(out, k, ca * cb * c)
        return out

    def substitute(self, bindings) -> "StructureConstants":
        out = StructureConstants(self.basis)
        for (i, j), combo in self.brackets.items():
            out.set_bracket(i, j, {k: c.substitute(bindings) for k, c in combo.items()})
        return out

    def dim(self) -> int:
        return len(self.basis)

    # -- serialization (fixture file format) -----------------------------

    def to_json(self) -> dict:
        brackets = {}
        for (i, j), combo in sorted(self.brackets.items()):
            brackets[f"{i},{j}"] = [[k, c.to_json()] for k, c in sorted(combo.items())]
        return {"basis": list(self.basis), "brackets": brackets}

    @staticmethod
    def from_json(data: dict) -> "StructureConstants":
        alg = StructureConstants(tuple(data["basis"]))
        for key, entries in data["brackets"].items():
            i_s, j_s = key.split(",")
            combo = {int(k): ParamPoly.from_json(pj) for k, pj in entries}
            alg.set_bracket(int(i_s), int(j_s), combo)
        return alg


def _signed_m(mu: int, nu: int):
    """Index and orientation sign of M_munu within the 4-d M block."""
    if mu == nu:
        return None, 0
    if mu < nu:
        return _M_INDEX[(mu, nu)], 1
    return _M_INDEX[(nu, mu)], -1


def build_deformed_algebra(eps4: int, eps5: int) -> StructureConstants:
    """Symbolic bracket table; coefficients are polynomials in l and rho."""
    if eps4 not in (1, -1) or eps5 not in (1, -1):
        raise ValueError("eps4 and eps5 must be +1 or -1")
    alg = StructureConstants(DEFORMED_BASIS)
    rho = sym("rho")
    ell2 = sym("l", 2)
    n_m = len(M_LABELS)
    p_of = lambda mu: n_m + mu
    x_of = lambda mu: n_m + 4 + mu
    c_idx = n_m + 8

    # [M_munu, M_rhosig] = i(M_musig eta_nurho + M_nurho eta_musig
    #                        - M_nusig eta_murho - M_murho eta_nusig)
    for (mu, nu), (rh, sg) in itertools.combinations(_M_PAIRS, 2):
        combo: Combo = {}
        for (a, b), metric in (
            ((mu, sg), eta4(nu, rh)),
            ((nu, rh), eta4(mu, sg)),
            ((nu, sg), -eta4(mu, rh)),
            ((mu, rh), -eta4(nu, sg)),
        ):
            if metric == 0:
                continue
            idx, orient = _signed_m(a, b)
            if idx is None:
                continue
            _combo_add(combo, idx, I * poly(metric * orient))
        alg.set_bracket(_M_INDEX[(mu, nu)], _M_INDEX[(rh, sg)], combo)

    # [M_munu, P_lam] = i(P_mu eta_nulam - P_nu eta_mulam); same pattern for x
    for (mu, nu), lam in itertools.product(_M_PAIRS, range(4)):
        for vec_of in (p_of, x_of):
            combo = {}
            if eta4(nu, lam) != 0:
                _combo_add(combo, vec_of(mu), I * poly(eta4(nu, lam)))
            if eta4(mu, lam) != 0:
                _combo_add(combo, vec_of(nu), -I * poly(eta4(mu, lam)))
            alg.set_bracket(_M_INDEX[(mu, nu)], vec_of(lam), combo)

    for mu, nu in itertools.combinations(range(4), 2):
        m_idx = _M_INDEX[(mu, nu)]
        # [P_mu, P_nu] = -i eps4 rho M_munu
        alg.set_bracket(p_of(mu), p_of(nu), {m_idx: -I * eps4 * rho})
        # [x_mu, x_nu] = -i eps5 l^2 M_munu
        alg.set_bracket(x_of(mu), x_of(nu), {m_idx: -I * eps5 * ell2})

    for mu, nu in itertools.product(range(4), repeat=2):
        # [P_mu, x_nu] = i eta_munu C
        if eta4(mu, nu) != 0:
            alg.set_bracket(p_of(mu), x_of(nu), {c_idx: I * poly(eta4(mu, nu))})

    for mu in range(4):
        # [P_mu, C] = -i eps4 rho x_mu ; [x_mu, C] = i eps5 l^2 P_mu
        alg.set_bracket(p_of(mu), c_idx, {x_of(mu): -I * eps4 * rho})
        alg.set_bracket(x_of(mu), c_idx, {p_of(mu): I * eps5 * ell2})

    return alg


def contract(alg: StructureConstants, *, rho_to_zero=False, ell_to_zero=False) -> StructureConstants:
    """Flat and/or commutative-coordinate limits of a symbolic table."""
    bindings = {}
    if rho_to_zero:
        bindings["rho"] = 0
    if ell_to_zero:
        bindings["l"] = 0
    if not bindings:
        return alg
    return alg.substitute(bindings)


def orthogonal_metric(eps4: int, eps5: int):
    diag = (Fraction(1), Fraction(-1), Fraction(-1), Fraction(-1), Fraction(eps4), Fraction(eps5))

    def eta6(a: int, b: int) -> Fraction:
        return diag[a] if a == b else Fraction(0)

    return eta6


def build_orthogonal_algebra(eps4: int, eps5: int) -> StructureConstants:
    """so-type algebra of the 6-d metric diag(1,-1,-1,-1,eps4,eps5)."""
    if eps4 not in (1, -1) or eps5 not in (1, -1):
        raise ValueError("eps4 and eps5 must be +1 or -1")
    eta6 = orthogonal_metric(eps4, eps5)
    pairs = list(itertools.combinations(range(6), 2))
    pair_index = {p: i for i, p in enumerate(pairs)}
    basis = tuple(f"M{a}{b}" for a, b in pairs)
    alg = StructureConstants(basis)

    def signed(a: int, b: int):
        if a == b:
            return None, 0
        if a < b:
            return pair_index[(a, b)], 1
        return pair_index[(b, a)], -1

    for (a, b), (c, d) in itertools.combinations(pairs, 2):
        combo: Combo = {}
        for (p, q), metric in (
            ((a, d), eta6(b, c)),
            ((b, c), eta6(a, d)),
            ((b, d), -eta6(a, c)),
            ((a, c), -eta6(b, d)),
        ):
            if metric == 0:
                continue
            idx, orient = signed(p, q)
            if idx is None:
                continue
            _combo_add(combo, idx, I * poly(metric * orient))
        alg.set_bracket(pair_index[(a, b)], pair_index[(c, d)], combo)
    return alg


def jacobi_residual(alg: StructureConstants):
    """All violated Jacobi triples: [(names, residual combo), ...]."""
    violations = []
    n = alg.dim()
    for i, j, k in itertools.combinations(range(n), 3):
        residual = combo_sum(
            alg.bracket_combos(alg.bracket(i, j), {k: P_ONE}),
            alg.bracket_combos(alg.bracket(j, k), {i: P_ONE}),
            alg.bracket_combos(alg.bracket(k, i), {j: P_ONE}),
        )
        if residual:
            names = (alg.basis[i], alg.basis[j], alg.basis[k])
            violations.append((names, residual))
    return violations


def jacobi_triple_count(alg: StructureConstants) -> int:
    n = alg.dim()
    return n * (n - 1) * (n - 2) // 6


@dataclass
class LinearMap:
    """phi(src e_i) = sum_j matrix[j][i] dst f_j, coefficients ParamPoly."""

    src: StructureConstants
    dst: StructureConstants
    columns: list  # one Combo per src basis element

    def image(self, i: int) -> Combo:
        return dict(self.columns[i])

    def apply(self, combo: Combo) -> Combo:
        out: Combo = {}
        for i, c in combo.items():
            for j, m in self.columns[i].items():
                _combo_add(out, j, c * m)
        return out


@dataclass
class IsoCheck:
    ok: bool
    invertible: bool
    mismatches: list  # [((name_i, name_j), residual combo)]


_SAMPLE_POINTS = (
    {"l": 2, "rho": 9, "r": 3, "m": 1, "k0": 1, "k1": 2, "k2": 3, "k3": 5, "mu": 1, "v": 1},
    {
        "l": Fraction(3, 2),
        "rho": Fraction(25, 4),
        "r": Fraction(5, 2),
        "m": Fraction(4, 3),
        "k0": 2,
        "k1": 3,
        "k2": 5,
        "k3": 7,
        "mu": Fraction(1, 2),
        "v": Fraction(2, 3),
    },
)


def _map_invertible(lmap: LinearMap) -> bool:
    """Exact rank at fixed nonzero rational sample points of the symbols."""
    from .matrices import ExactMatrix

    n_dst, n_src = lmap.dst.dim(), lmap.src.dim()
    if n_dst != n_src:
        return False
    for sample in _SAMPLE_POINTS:
        rows = [[poly(0)] * n_src for _ in range(n_dst)]
        for i, col in enumerate(lmap.columns):
            for j, coeff in col.items():
                rows[j][i] = poly(coeff.evaluate(sample))
        if ExactMatrix(rows).rank() == n_src:
            return True
    return False


def verify_linear_isomorphism(lmap: LinearMap) -> IsoCheck:
    """Exact check that phi([a,b]_src) = [phi a, phi b]_dst on all basis pairs.

    Non-invertibility is reported separately from bracket mismatches.
    """
    src, dst = lmap.src, lmap.dst
    mismatches = []
    for i, j in itertools.combinations(range(src.dim()), 2):
        lhs = lmap.apply(src.bracket(i, j))
        rhs = dst.bracket_combos(lmap.image(i), lmap.image(j))
        residual = combo_sum(lhs, combo_scale(rhs, -1))
        if residual:
            mismatches.append(((src.basis[i], src.basis[j]), residual))
    invertible = _map_invertible(lmap)
    return IsoCheck(ok=invertible and not mismatches, invertible=invertible, mismatches=mismatches)


def scaling_map(src: StructureConstants, dst: StructureConstants,
                alpha: ParamPoly, beta: ParamPoly, gamma: ParamPoly) -> LinearMap:
    """The rescaling ansatz M -> M, P_mu -> alpha M_mu4, x_mu -> beta M_mu5,
    C -> gamma M_45 as a LinearMap from the deformed to the orthogonal basis."""
    columns = []
    for name in src.basis:
        if name.startswith("M"):
            columns.append({dst.index[name]: P_ONE})
        elif name.startswith("P"):
            mu = int(name[1])
            columns.append({dst.index[f"M{mu}4"]: alpha})
        elif name.startswith("x"):
            mu = int(name[1])
            columns.append({dst.index[f"M{mu}5"]: beta})
        elif name == C_LABEL:
            columns.append({dst.index["M45"]: gamma})
        else:
            raise ValueError(f"unexpected basis label {name}")
    return LinearMap(src=src, dst=dst, columns=columns)


@dataclass
class IsomorphismSolution:
    alpha: ParamPoly
    beta: ParamPoly
    gamma: ParamPoly
    map: LinearMap
    src: StructureConstants  # deformed table with rho -> r^2 substituted
    dst: StructureConstants
    passing_sign_choices: list  # [(s_alpha, s_beta, s_gamma), ...]


def solve_isomorphism_scalings(eps4: int, eps5: int) -> IsomorphismSolution:
    """Exhaustive sign search for the rescaling identifying the two algebras.

    The bracket [P_mu, P_nu] = -i eps4 rho M_munu forces alpha^2 = rho, which
    has no polynomial solution in rho itself; the deformed table is therefore
    reparametrized with rho = r^2 before matching.  All sign choices with
    gamma = -alpha*beta pass; the canonical representative (r, l, -r*l) is
    returned.
    """
    r = sym("r")
    ell = sym("l")
    src = build_deformed_algebra(eps4, eps5).substitute({"rho": r * r})
    dst = build_orthogonal_algebra(eps4, eps5)

    passing = []
    canonical = None
    for s_a, s_b, s_g in itertools.product((1, -1), repeat=3):
        alpha = poly(s_a) * r
        beta = poly(s_b) * ell
        gamma = poly(s_g) * r * ell
        lmap = scaling_map(src, dst, alpha, beta, gamma)
        check = verify_linear_isomorphism(lmap)
        if check.ok:
            passing.append((s_a, s_b, s_g))
            if (s_a, s_b) == (1, 1):
                canonical = (alpha, beta, gamma, lmap)
    if canonical is None:
        raise ArithmeticError("no scaling signs satisfy the bracket match")
    alpha, beta, gamma, lmap = canonical
    return IsomorphismSolution(
        alpha=alpha, beta=beta, gamma=gamma, map=lmap,
        src=src, dst=dst, passing_sign_choices=sorted(passing),
    )
