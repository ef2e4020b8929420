"""Momentum-space extended Dirac operator, its two dispersion branches,
reference-frame spinor solutions, and boost covariance.

The operator is D(k) = g^mu k_mu - eps5 * g^4 * (l/2) k^2 in the Majorana
representation, i.e. g.k - g5 (l/2) k^2 for eps5 = +1 and g.k + i g5 (l/2)
k^2 for eps5 = -1.  Squaring gives the dispersion polynomial
k^2 + eps5 (l^2/4)(k^2)^2, so the branches are k^2 = 0 and k^2 = -eps5 4/l^2.

Momenta are stored upper-index and lowered with diag(1,-1,-1,-1) inside
dirac_matrix.  Exact arithmetic covers reference frames and nullspaces;
boosts run in float mode with tolerance 1e-10.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction

import numpy as np

from .clifford import (
    GammaRep,
    SpinorMatrix,
    VerificationError,
    boost_matrix,
    build_majorana_rep,
    reality_class,
    vector_boost,
)
from .matrices import ExactMatrix
from .scalars import ExactScalar, ParamPoly, poly, sym

_ETA_DIAG = (1, -1, -1, -1)

BRANCHES = ("massless", "heavy")


def _is_exact_number(x) -> bool:
    return isinstance(x, (int, Fraction, ExactScalar))


def _as_fraction(x) -> Fraction:
    if isinstance(x, ExactScalar):
        return x.to_fraction()
    return Fraction(x)


@dataclass(frozen=True)
class ModeProblem:
    """eps5 sign, deformation length l > 0, and a real four-vector k
    (upper-index components k0..k3)."""

    eps5: int
    ell: object
    k: tuple

    def __post_init__(self):
        if self.eps5 not in (1, -1):
            raise ValueError("eps5 must be +1 or -1")
        if not float(self.ell) > 0:
            raise ValueError("ell must be positive")
        if len(self.k) != 4:
            raise ValueError("k must have four components")
        object.__setattr__(self, "k", tuple(self.k))

    @property
    def exact(self) -> bool:
        return _is_exact_number(self.ell) and all(_is_exact_number(c) for c in self.k)

    def k_squared(self):
        if self.exact:
            kf = [_as_fraction(c) for c in self.k]
            return kf[0] ** 2 - kf[1] ** 2 - kf[2] ** 2 - kf[3] ** 2
        k = [float(c) for c in self.k]
        return k[0] ** 2 - k[1] ** 2 - k[2] ** 2 - k[3] ** 2


def dirac_matrix(p: ModeProblem) -> SpinorMatrix:
    """g^mu k_mu - eps5 g^4 (l/2) k^2; exact when all inputs are rational."""
    rep = build_majorana_rep(p.eps5)
    if p.exact:
        ell = _as_fraction(p.ell)
        kf = [_as_fraction(c) for c in p.k]
        ksq = p.k_squared()
        out = ExactMatrix.zeros(4)
        for mu in range(4):
            k_low = kf[mu] * _ETA_DIAG[mu]
            if k_low:
                out = out + rep.gamma[mu].scale(poly(ExactScalar(k_low)))
        coeff = Fraction(-p.eps5) * ell / 2 * ksq
        if coeff:
            out = out + rep.gamma[4].scale(poly(ExactScalar(coeff)))
        return SpinorMatrix(matrix=out, mode="exact")
    ell = float(p.ell)
    k = [float(c) for c in p.k]
    ksq = p.k_squared()
    out = np.zeros((4, 4), dtype=complex)
    for mu in range(4):
        out += rep.numeric(mu) * (k[mu] * _ETA_DIAG[mu])
    out += rep.numeric(4) * (-p.eps5 * ell / 2 * ksq)
    return SpinorMatrix(matrix=out, mode="float")


def dirac_matrix_symbolic(eps5: int) -> ExactMatrix:
    """The operator with symbols k0..k3 and l, for identity checks."""
    rep = build_majorana_rep(eps5)
    ksq = sym("k0") ** 2 - sym("k1") ** 2 - sym("k2") ** 2 - sym("k3") ** 2
    out = ExactMatrix.zeros(4)
    for mu in range(4):
        out = out + rep.gamma[mu].scale(sym(f"k{mu}") * poly(_ETA_DIAG[mu]))
    half = ParamPoly.from_scalar(ExactScalar(Fraction(1, 2)))
    out = out + rep.gamma[4].scale(ksq * sym("l") * half * poly(-eps5))
    return out


def squared_identity_residual(eps5: int) -> ExactMatrix:
    """D(k)^2 - (k^2 + eps5 (l^2/4)(k^2)^2) * Id with symbolic k and l."""
    D = dirac_matrix_symbolic(eps5)
    ksq = sym("k0") ** 2 - sym("k1") ** 2 - sym("k2") ** 2 - sym("k3") ** 2
    quarter = ParamPoly.from_scalar(ExactScalar(Fraction(1, 4)))
    scalar = ksq + ksq * ksq * sym("l") ** 2 * quarter * poly(eps5)
    return D @ D - ExactMatrix.identity(4).scale(scalar)


def dispersion_roots(ell, eps5: int) -> set:
    """Exact root set of the dispersion polynomial in k^2:
    {0, 4/l^2} for eps5 = -1, {0, -4/l^2} for eps5 = +1."""
    if eps5 not in (1, -1):
        raise ValueError("eps5 must be +1 or -1")
    if _is_exact_number(ell):
        ellf = _as_fraction(ell)
        if ellf <= 0:
            raise ValueError("ell must be positive")
        return {Fraction(0), Fraction(-4 * eps5) / ellf ** 2}
    ellf = float(ell)
    if ellf <= 0:
        raise ValueError("ell must be positive")
    return {0.0, -4.0 * eps5 / ellf ** 2}


@dataclass(frozen=True)
class SpinorSolution:
    """Nullspace data of the operator at a fixed momentum."""

    k: tuple
    basis: tuple
    branch: str
    k2: object
    spinor_class: str
    eps5: int
    ell: object
    mode: str


def _kernel_exact(matrix: ExactMatrix):
    return [tuple(entry for entry in vec) for vec in matrix.kernel()]


def reference_solutions(ell, eps5: int, branch: str, energy_sign: int = 1,
                        kappa=1) -> SpinorSolution:
    """Reference-frame solutions with exact nullspaces.

    Heavy branch: rest frame k = (2/l, 0, 0, 0) for eps5 = -1 (timelike
    branch), z-frame k = (0, 0, 0, 2/l) for eps5 = +1 (spacelike branch).
    Massless branch: k = (kappa, 0, 0, kappa).  The nullspace must come out
    two-dimensional; anything else signals a convention error.
    """
    if branch not in BRANCHES:
        raise ValueError(f"branch must be one of {BRANCHES}")
    if energy_sign not in (1, -1):
        raise ValueError("energy_sign must be +1 or -1")
    ellf = _as_fraction(ell)
    if ellf <= 0:
        raise ValueError("ell must be positive")
    if branch == "heavy":
        edge = Fraction(2 * energy_sign) / ellf
        k = (edge, 0, 0, 0) if eps5 == -1 else (0, 0, 0, edge)
    else:
        kap = _as_fraction(kappa)
        if kap <= 0:
            raise ValueError("kappa must be positive")
        k = (kap, 0, 0, kap)
    problem = ModeProblem(eps5=eps5, ell=ellf, k=k)
    op = dirac_matrix(problem)
    basis = _kernel_exact(op.matrix)
    if len(basis) != 2:
        raise VerificationError(
            f"nullspace dimension {len(basis)} != 2 at k={k} (eps5={eps5})"
        )
    cls = reality_class(basis, mode="exact")
    return SpinorSolution(
        k=k,
        basis=tuple(basis),
        branch=branch,
        k2=problem.k_squared(),
        spinor_class=cls,
        eps5=eps5,
        ell=ellf,
        mode="exact",
    )


def residual(k, u, ell, eps5: int) -> float:
    """||D(k) u|| / ||u||; exactly 0.0 when an exact input annihilates."""
    u = list(u)
    problem = ModeProblem(eps5=eps5, ell=ell, k=tuple(k))
    if problem.exact and all(_is_exact_number(c) or isinstance(c, complex) for c in u):
        op = dirac_matrix(problem).matrix
        uvec = ExactMatrix.from_complex_entries([[c] for c in u])
        if uvec.is_zero():
            raise ValueError("zero vector has no residual")
        image = op @ uvec
        if image.is_zero():
            return 0.0
        img = image.to_complex_array().ravel()
        ufl = uvec.to_complex_array().ravel()
        return float(np.linalg.norm(img) / np.linalg.norm(ufl))
    D = dirac_matrix(
        ModeProblem(eps5=eps5, ell=float(ell), k=tuple(float(c) for c in k))
    ).matrix
    uarr = np.asarray(u, dtype=complex)
    norm = np.linalg.norm(uarr)
    if norm == 0.0:
        raise ValueError("zero vector has no residual")
    return float(np.linalg.norm(D @ uarr) / norm)


def boost_solution(s: SpinorSolution, omega) -> SpinorSolution:
    """Transport a solution: k' = Lambda k, u' = S u; verifies the residual
    stays below 1e-10 and k^2 is preserved to 1e-10 relative."""
    lam = vector_boost(omega)
    S = boost_matrix(omega).matrix
    k = np.asarray([float(c) for c in s.k])
    k_new = lam @ k
    ell = float(s.ell)
    basis_new = []
    for u in s.basis:
        u_new = S @ np.asarray([complex(c) for c in u])
        r = residual(tuple(k_new), u_new, ell, s.eps5)
        if r > 1e-10:
            raise VerificationError(
                f"boosted solution residual {r:.3e} exceeds 1e-10"
            )
        basis_new.append(tuple(u_new))
    k2_old = float(s.k2)
    k2_new = k_new[0] ** 2 - k_new[1] ** 2 - k_new[2] ** 2 - k_new[3] ** 2
    scale = max(abs(k2_old), 1.0)
    if abs(k2_new - k2_old) > 1e-10 * scale:
        raise VerificationError(
            f"k^2 changed under boost: {k2_old!r} -> {k2_new!r}"
        )
    cls = reality_class([list(u) for u in basis_new], mode="float")
    return replace(
        s,
        k=tuple(float(c) for c in k_new),
        basis=tuple(basis_new),
        k2=k2_new,
        spinor_class=cls,
        ell=ell,
        mode="float",
    )
