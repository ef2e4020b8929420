"""Check-suite drivers with deterministic, machine-readable reports.

Every check produces a CheckReport whose `relation` field states the
identity being verified in plain ASCII.  Reports serialize to JSON with
sorted keys; floats are rendered as 15-significant-digit strings and exact
rationals as "p/q" strings, so a run with a fixed seed is byte-identical.
Timings are opt-in (null by default) to keep that reproducibility.
"""

from __future__ import annotations

import csv
import io
import json
import math
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .scalars import ExactScalar, ParamPoly, poly, sym
from .lie_algebra import (
    DEFORMED_BASIS,
    StructureConstants,
    build_deformed_algebra,
    build_orthogonal_algebra,
    contract,
    jacobi_residual,
    jacobi_triple_count,
    solve_isomorphism_scalings,
    verify_linear_isomorphism,
)
from .weyl import BRACKET_FAMILIES, verify_rep_closure
from .enveloping import k_squared, lemma_matrix_check, verify_plane_wave_relations
from .clifford import (
    build_majorana_rep,
    gamma5_product_check,
    majorana_imaginary_check,
    verify_clifford,
)
from .modes import (
    boost_solution,
    dispersion_roots,
    reference_solutions,
    residual as mode_residual,
    squared_identity_residual,
)
from .clifford import VerificationError
from .seesaw import (
    CouplingConfig,
    RootFindingError,
    exact_mode_spectrum,
    leading_mass,
    light_mass_leading,
    verify_effective_equation,
)

SIGN_PAIRS = ((1, 1), (1, -1), (-1, 1), (-1, -1))
BOOST_DRAWS = 100
BOOST_TOL = 1e-10
LEMMA_TOL = 1e-8


@dataclass(frozen=True)
class RunConfig:
    """Shared knobs for every check command.  A None sign means
    "sweep both values" (both eps4 values where eps4 matters)."""

    eps4: int | None = None
    eps5: int | None = None
    ell: Fraction = Fraction(1)
    g: ExactScalar = ExactScalar(Fraction(1))
    # default background sits well inside the seesaw regime mu/M << 1
    vev: Fraction = Fraction(1, 100)
    order: int = 4
    seed: int = 0
    fmt: str = "json"
    out: str | None = None
    fixture: str | None = None
    timings: bool = False

    def __post_init__(self):
        if self.eps4 not in (None, 1, -1) or self.eps5 not in (None, 1, -1):
            raise ValueError("sign parameters must be +1 or -1")
        if not self.ell > 0:
            raise ValueError("ell must be positive")
        if self.vev < 0:
            raise ValueError("vev must be nonnegative")
        if self.order < 1:
            raise ValueError("truncation order must be >= 1")
        if not 0 <= self.seed < 2 ** 64:
            raise ValueError("seed must fit in 64 bits")
        if self.fmt not in ("json", "csv"):
            raise ValueError("format must be json or csv")

    def sign_pairs(self):
        return tuple(
            (e4, e5)
            for e4, e5 in SIGN_PAIRS
            if (self.eps4 is None or e4 == self.eps4)
            and (self.eps5 is None or e5 == self.eps5)
        )

    def eps5_values(self):
        return (1, -1) if self.eps5 is None else (self.eps5,)


@dataclass
class CheckReport:
    check: str
    params: dict
    status: str
    residual: object
    relation: str
    details: dict = field(default_factory=dict)
    duration_ms: float | None = None

    @property
    def passed(self) -> bool:
        return self.status == "pass"


def _fmt(value):
    """Deterministic JSON-friendly rendering of numbers and containers."""
    if value is None or isinstance(value, (bool, int, str)):
        return value
    if isinstance(value, float):
        return format(value, ".15g")
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (ExactScalar, ParamPoly)):
        return str(value)
    if isinstance(value, complex):
        return format(value.real, ".15g") + ("+" if value.imag >= 0 else "") + format(
            value.imag, ".15g"
        ) + "i"
    if isinstance(value, dict):
        return {str(k): _fmt(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_fmt(v) for v in value]
    return str(value)


def _report(reports, cfg, t0, check, params, ok, relation, residual=None, details=None):
    duration = (time.perf_counter() - t0) * 1000.0 if cfg.timings else None
    reports.append(
        CheckReport(
            check=check,
            params=dict(params),
            status="pass" if ok else "fail",
            residual=residual,
            relation=relation,
            details=details or {},
            duration_ms=duration,
        )
    )


def _sorted_reports(reports):
    return sorted(
        reports, key=lambda r: (r.check, json.dumps(_fmt(r.params), sort_keys=True))
    )


# -- algebra ---------------------------------------------------------------

_P_RANGE = range(6, 10)
_X_RANGE = range(10, 14)


def cmd_verify_algebra(cfg: RunConfig) -> list[CheckReport]:
    reports: list[CheckReport] = []
    for e4, e5 in cfg.sign_pairs():
        params = {"eps4": e4, "eps5": e5}

        t0 = time.perf_counter()
        alg = build_deformed_algebra(e4, e5)
        violations = jacobi_residual(alg)
        _report(
            reports, cfg, t0, "jacobi_deformed", params,
            ok=not violations,
            relation="[[a,b],c] + [[b,c],a] + [[c,a],b] = 0",
            residual=len(violations),
            details={
                "triples": jacobi_triple_count(alg),
                "violations": len(violations),
                "first_violation": list(violations[0][0]) if violations else None,
            },
        )

        t0 = time.perf_counter()
        ortho = build_orthogonal_algebra(e4, e5)
        oviol = jacobi_residual(ortho)
        _report(
            reports, cfg, t0, "jacobi_orthogonal", params,
            ok=not oviol,
            relation="[[a,b],c] + [[b,c],a] + [[c,a],b] = 0",
            residual=len(oviol),
            details={"triples": jacobi_triple_count(ortho), "violations": len(oviol)},
        )

        t0 = time.perf_counter()
        sol = solve_isomorphism_scalings(e4, e5)
        iso = verify_linear_isomorphism(sol.map)
        ok = iso.ok and iso.invertible and len(sol.passing_sign_choices) == 4
        _report(
            reports, cfg, t0, "isomorphism", params,
            ok=ok,
            relation="phi([a,b]) = [phi(a), phi(b)] with P -> alpha*M_mu4, "
                     "x -> beta*M_mu5, C -> gamma*M45",
            residual=len(iso.mismatches),
            details={
                "alpha": str(sol.alpha),
                "beta": str(sol.beta),
                "gamma": str(sol.gamma),
                "invertible": iso.invertible,
                "passing_sign_choices": [list(s) for s in sol.passing_sign_choices],
                "mismatched_brackets": len(iso.mismatches),
            },
        )

        t0 = time.perf_counter()
        flat_rho = contract(alg, rho_to_zero=True)
        flat_ell = contract(alg, ell_to_zero=True)
        pp_vanish = all(
            not flat_rho.bracket(i, j) for i in _P_RANGE for j in _P_RANGE if i < j
        )
        xx_vanish = all(
            not flat_ell.bracket(i, j) for i in _X_RANGE for j in _X_RANGE if i < j
        )
        rho_viol = jacobi_residual(flat_rho)
        ell_viol = jacobi_residual(flat_ell)
        _report(
            reports, cfg, t0, "contraction", params,
            ok=pp_vanish and xx_vanish and not rho_viol and not ell_viol,
            relation="rho -> 0 flattens [p,p]; l -> 0 flattens [x,x]; "
                     "Jacobi survives both limits",
            residual=len(rho_viol) + len(ell_viol),
            details={
                "momentum_brackets_vanish": pp_vanish,
                "coordinate_brackets_vanish": xx_vanish,
                "jacobi_violations_rho_limit": len(rho_viol),
                "jacobi_violations_ell_limit": len(ell_viol),
            },
        )

    if cfg.fixture:
        t0 = time.perf_counter()
        with open(cfg.fixture, "r", encoding="utf-8") as fh:
            table = StructureConstants.from_json(json.load(fh))
        violations = jacobi_residual(table)
        _report(
            reports, cfg, t0, "jacobi_fixture", {"basis_dim": table.dim()},
            ok=not violations,
            relation="[[a,b],c] + [[b,c],a] + [[c,a],b] = 0",
            residual=len(violations),
            details={
                "path": cfg.fixture,
                "triples": jacobi_triple_count(table),
                "violations": len(violations),
                "first_violation": list(violations[0][0]) if violations else None,
                "first_residual": (
                    {table.basis[i]: str(c) for i, c in violations[0][1].items()}
                    if violations
                    else None
                ),
            },
        )
    return _sorted_reports(reports)


# -- differential realization ----------------------------------------------


def cmd_verify_rep(cfg: RunConfig) -> list[CheckReport]:
    reports: list[CheckReport] = []
    for e5 in cfg.eps5_values():
        t0 = time.perf_counter()
        closure = verify_rep_closure(e5)
        for fam in BRACKET_FAMILIES:
            rows = closure[fam]
            bad = [pair for pair, r in rows if not r.is_zero()]
            _report(
                reports, cfg, t0, f"rep_closure_{fam}", {"eps5": e5, "family": fam},
                ok=not bad,
                relation="[rep(a), rep(b)] = rep([a, b])",
                residual=len(bad),
                details={"pairs": len(rows), "violations": len(bad),
                         "first_violation": list(bad[0]) if bad else None},
            )
            t0 = time.perf_counter()
    return _sorted_reports(reports)


# -- gamma matrices ----------------------------------------------------------


def cmd_verify_clifford(cfg: RunConfig) -> list[CheckReport]:
    reports: list[CheckReport] = []
    for e5 in cfg.eps5_values():
        rep = build_majorana_rep(e5)
        t0 = time.perf_counter()
        for rc in verify_clifford(rep):
            _report(
                reports, cfg, t0, f"clifford_{rc.name}", {"eps5": e5},
                ok=rc.ok, relation=rc.relation, residual=rc.residual,
            )
            t0 = time.perf_counter()
        for rc in (gamma5_product_check(rep), majorana_imaginary_check(rep)):
            _report(
                reports, cfg, t0, f"clifford_{rc.name}", {"eps5": e5},
                ok=rc.ok, relation=rc.relation, residual=rc.residual,
            )
            t0 = time.perf_counter()
    return _sorted_reports(reports)


# -- plane wave ---------------------------------------------------------------


def _remainder_detail(rems, order):
    zero = all(r.is_zero() for r in rems)
    degrees = [r.min_ell_degree() for r in rems if not r.is_zero()]
    ok = zero or all(d is not None and d >= order + 1 for d in degrees)
    return ok, {
        "exactly_zero": zero,
        "min_ell_degree": min(degrees) if degrees else None,
    }


def cmd_verify_planewave(cfg: RunConfig) -> list[CheckReport]:
    reports: list[CheckReport] = []
    half = ExactScalar(Fraction(1, 2))
    for e5 in cfg.eps5_values():
        params = {"eps5": e5, "order": cfg.order}
        t0 = time.perf_counter()
        chk = verify_plane_wave_relations(e5, cfg.order)

        ok, det = _remainder_detail(chk.momentum_remainders, cfg.order)
        _report(reports, cfg, t0, "planewave_momentum", params, ok=ok,
                relation="[p_mu, A] = k_mu", details=det)

        t0 = time.perf_counter()
        _report(
            reports, cfg, t0, "planewave_centrality", params,
            ok=not chk.centrality_remainders,
            relation="[[p_mu, A], X] = 0 for every generator X",
            residual=len(chk.centrality_remainders),
            details={"violations": len(chk.centrality_remainders)},
        )

        t0 = time.perf_counter()
        ok, det = _remainder_detail([chk.derivative_remainder], cfg.order)
        _report(reports, cfg, t0, "planewave_derivative", params, ok=ok,
                relation="d4(A) = i*eps5*l*(k.p)", details=det)

        t0 = time.perf_counter()
        ok, det = _remainder_detail([chk.mixed_remainder], cfg.order)
        _report(reports, cfg, t0, "planewave_mixed", params, ok=ok,
                relation="[A, d4(A)] = -i*eps5*l*k^2", details=det)

        t0 = time.perf_counter()
        expect = (
            ParamPoly.from_scalar(ExactScalar(Fraction(0), Fraction(1)))
            * poly(e5) * sym("l") * k_squared() * poly(half)
        )
        ok = chk.vacuum_scalar == expect
        _report(
            reports, cfg, t0, "planewave_vacuum", params, ok=ok,
            relation="(d4(A) + (1/2)[A, d4(A)]) on the vacuum = i*eps5*l*k^2/2",
            details={"value": str(chk.vacuum_scalar)},
        )

        t0 = time.perf_counter()
        res = lemma_matrix_check(e5)
        worst = max(res.values())
        _report(
            reports, cfg, t0, "planewave_lemma_numeric", params,
            ok=worst < LEMMA_TOL,
            relation="[p, e^A] = [p, A] e^A and d(e^A) = (dA + (1/2)[A, dA]) e^A "
                     "on a nilpotent matrix model",
            residual=worst,
            details={k: v for k, v in sorted(res.items())},
        )
    return _sorted_reports(reports)


# -- dispersion and modes -----------------------------------------------------


def cmd_modes(cfg: RunConfig) -> list[CheckReport]:
    reports: list[CheckReport] = []
    for e5 in cfg.eps5_values():
        params = {"ell": str(cfg.ell), "eps5": e5}

        t0 = time.perf_counter()
        identity = squared_identity_residual(e5)
        _report(
            reports, cfg, t0, "dispersion_identity", {"eps5": e5},
            ok=identity.is_zero(),
            relation="D(k)^2 = (k^2 + eps5*(l^2/4)*(k^2)^2) * Id",
        )

        t0 = time.perf_counter()
        roots = dispersion_roots(cfg.ell, e5)
        expected = {Fraction(0), Fraction(-4 * e5) / Fraction(cfg.ell) ** 2}
        _report(
            reports, cfg, t0, "dispersion_roots", params,
            ok=roots == expected,
            relation="k^2 * (1 + eps5*(l^2/4)*k^2) = 0",
            details={"roots": sorted(str(r) for r in roots)},
        )

        t0 = time.perf_counter()
        sweep = {}
        sweep_ok = True
        for ell in (Fraction(1, 2), Fraction(1), Fraction(2)):
            got = dispersion_roots(ell, e5)
            want = {Fraction(0), Fraction(-4 * e5) / ell ** 2}
            sweep[str(ell)] = sorted(str(r) for r in got)
            sweep_ok = sweep_ok and got == want
        _report(
            reports, cfg, t0, "dispersion_sweep", {"eps5": e5},
            ok=sweep_ok,
            relation="heavy root equals -eps5*4/l^2 exactly at l in {1/2, 1, 2}",
            details=sweep,
        )

        t0 = time.perf_counter()
        heavy = massless = None
        want_heavy = "Dirac" if e5 == -1 else "Majorana"
        try:
            heavy = reference_solutions(cfg.ell, e5, "heavy")
            worst = max(
                mode_residual(heavy.k, u, heavy.ell, e5) for u in heavy.basis
            )
            ok = heavy.spinor_class == want_heavy and worst == 0.0
            details = {
                "k": [str(c) for c in heavy.k],
                "k2": str(heavy.k2),
                "nullspace_dim": len(heavy.basis),
                "class": heavy.spinor_class,
                "expected_class": want_heavy,
            }
        except VerificationError as exc:
            ok, worst, details = False, None, {"error": str(exc)}
        _report(
            reports, cfg, t0, "modes_reference_heavy", params, ok=ok,
            relation="D(k) u = 0 with dim ker = 2 on the heavy branch",
            residual=worst, details=details,
        )

        t0 = time.perf_counter()
        try:
            massless = reference_solutions(cfg.ell, e5, "massless")
            worst = max(
                mode_residual(massless.k, u, massless.ell, e5) for u in massless.basis
            )
            ok = massless.spinor_class == "Majorana" and worst == 0.0
            details = {
                "k": [str(c) for c in massless.k],
                "nullspace_dim": len(massless.basis),
                "class": massless.spinor_class,
            }
        except VerificationError as exc:
            ok, worst, details = False, None, {"error": str(exc)}
        _report(
            reports, cfg, t0, "modes_reference_massless", params, ok=ok,
            relation="D(k) u = 0 with dim ker = 2 on the massless branch",
            residual=worst, details=details,
        )

        t0 = time.perf_counter()
        rng = random.Random(cfg.seed)
        worst_res = 0.0
        worst_drift = 0.0
        failure = None if heavy and massless else "reference solutions unavailable"
        solutions = (heavy, massless)
        for trial in range(BOOST_DRAWS if failure is None else 0):
            omega = np.zeros((4, 4))
            for a in range(4):
                for b in range(a + 1, 4):
                    omega[a, b] = rng.uniform(-1.0, 1.0)
                    omega[b, a] = -omega[a, b]
            sol = solutions[trial % 2]
            try:
                moved = boost_solution(sol, omega)
            except VerificationError as exc:
                failure = str(exc)
                break
            worst_res = max(
                worst_res,
                max(mode_residual(moved.k, u, moved.ell, e5) for u in moved.basis),
            )
            drift = abs(float(moved.k2) - float(sol.k2)) / max(abs(float(sol.k2)), 1.0)
            worst_drift = max(worst_drift, drift)
        _report(
            reports, cfg, t0, "modes_boost_covariance",
            {**params, "seed": cfg.seed},
            ok=failure is None and worst_res < BOOST_TOL and worst_drift < BOOST_TOL,
            relation="D(Lambda k) S u = 0 and k^2 invariant under paired boosts",
            residual=worst_res,
            details={
                "draws": BOOST_DRAWS,
                "worst_k2_drift": worst_drift,
                "failure": failure,
            },
        )
    return _sorted_reports(reports)


# -- seesaw -------------------------------------------------------------------


def cmd_seesaw(cfg: RunConfig) -> list[CheckReport]:
    reports: list[CheckReport] = []
    for e5 in cfg.eps5_values():
        coupling = CouplingConfig(g=cfg.g, vev=cfg.vev, ell=cfg.ell, eps5=e5)
        params = {
            "ell": str(cfg.ell), "eps5": e5, "g": str(cfg.g), "vev": str(cfg.vev),
        }

        t0 = time.perf_counter()
        k2, cls = light_mass_leading(coupling)
        mass = leading_mass(coupling)
        _report(
            reports, cfg, t0, "seesaw_leading", params,
            ok=True,
            relation="m = |g|^2 vev^2 l / 2; k^2 = -eps5 * m^2",
            details={"mass": mass, "k2": k2, "class": cls},
        )

        t0 = time.perf_counter()
        eff = verify_effective_equation(coupling)
        class_ok = eff.rest_frame_class in (None, cls)
        _report(
            reports, cfg, t0, "seesaw_effective", params,
            ok=eff.identity_ok and class_ok,
            relation="g.k - eps5*|g|^2*vev^2*(l/2)*g4 reproduces the printed "
                     "gamma5 mass term",
            details={
                "identity_exact": eff.identity_ok,
                "rest_frame_class": eff.rest_frame_class,
                "expected_class": cls,
            },
        )

        t0 = time.perf_counter()
        mu = coupling.mu()
        big_m = 2.0 / float(cfg.ell)
        ratio = mu / big_m
        tol = max(2.0 * ratio * ratio, 1e-12)
        spectrum_relation = ("light root of det(coupled matrix) matches "
                             "|g|^2 vev^2 l/2 to second order in mu/M")
        try:
            spectrum = exact_mode_spectrum(coupling)
        except RootFindingError as exc:
            _report(
                reports, cfg, t0, "seesaw_spectrum", params, ok=False,
                relation=spectrum_relation,
                details={"error": str(exc), "diagnostics": _fmt(exc.diagnostics)},
            )
        else:
            heavy_mass = math.sqrt(abs(spectrum.heavy_k2))
            heavy_drift = abs(heavy_mass - big_m) / big_m
            heavy_ok = heavy_drift <= 2.0 * ratio * ratio + 1e-12
            if mu == 0.0:
                heavy_ok = spectrum.heavy_k2_exact is not None and abs(
                    spectrum.heavy_k2_exact
                ) == Fraction(4) / Fraction(cfg.ell) ** 2
            class_ok = spectrum.light_class in (None, cls)
            _report(
                reports, cfg, t0, "seesaw_spectrum", params,
                ok=spectrum.deviation <= tol and heavy_ok and class_ok,
                relation=spectrum_relation,
                residual=spectrum.deviation,
                details={
                    "deviation_tolerance": tol,
                    "leading_light_mass": spectrum.leading_light_mass,
                    "light_k2": spectrum.light_k2,
                    "heavy_k2": spectrum.heavy_k2,
                    "heavy_k2_exact": spectrum.heavy_k2_exact,
                    "light_class": spectrum.light_class,
                    "heavy_class": spectrum.heavy_class,
                    "roots": list(spectrum.roots),
                    "mu_over_M": ratio,
                },
            )

        # quadratic convergence sweep: mu/M = 1e-2 then 1e-3, unit coupling
        t0 = time.perf_counter()
        sweep_details = {}
        sweep_ok = True
        for sweep_ratio, bound in ((Fraction(1, 100), 1e-3), (Fraction(1, 1000), 1e-5)):
            probe = CouplingConfig(
                g=ExactScalar(Fraction(1)),
                vev=2 * sweep_ratio / cfg.ell,
                ell=cfg.ell,
                eps5=e5,
            )
            try:
                sw = exact_mode_spectrum(probe)
            except RootFindingError as exc:
                sweep_ok = False
                sweep_details[str(sweep_ratio)] = {"error": str(exc)}
                continue
            scaling = sw.deviation / float(sweep_ratio) ** 2
            sweep_ok = sweep_ok and sw.deviation < bound and scaling <= 2.0
            sweep_details[str(sweep_ratio)] = {
                "deviation": sw.deviation,
                "bound": bound,
                "scaling_constant": scaling,
            }
        _report(
            reports, cfg, t0, "seesaw_convergence",
            {"ell": str(cfg.ell), "eps5": e5},
            ok=sweep_ok,
            relation="deviation from leading mass scales as (mu/M)^2 "
                     "with constant <= 2",
            details=sweep_details,
        )

        t0 = time.perf_counter()
        free = CouplingConfig(
            g=ExactScalar(Fraction(0)), vev=cfg.vev, ell=cfg.ell, eps5=e5
        )
        try:
            sw0 = exact_mode_spectrum(free)
            heavy_expected = Fraction(-4 * e5) / Fraction(cfg.ell) ** 2
            decouple_ok = (
                sw0.heavy_k2_exact == heavy_expected
                and sw0.light_k2_exact == Fraction(0)
            )
            details = {
                "heavy_k2_exact": sw0.heavy_k2_exact,
                "light_k2_exact": sw0.light_k2_exact,
                "expected_heavy_k2": heavy_expected,
            }
        except RootFindingError as exc:
            decouple_ok, details = False, {"error": str(exc)}
        _report(
            reports, cfg, t0, "seesaw_decoupling",
            {"ell": str(cfg.ell), "eps5": e5},
            ok=decouple_ok,
            relation="at g = 0 the heavy root equals -eps5*4/l^2 exactly "
                     "and the light root is 0",
            details=details,
        )
    return _sorted_reports(reports)


# -- scans --------------------------------------------------------------------

SCAN_PARAMS = ("ell", "g", "vev")
SCAN_COLUMNS = (
    "param", "value", "eps5", "dispersion_heavy_k2", "light_k2", "heavy_k2",
    "leading_light_mass", "deviation", "status", "error",
)


def cmd_scan(cfg: RunConfig, param: str, start: Fraction, stop: Fraction,
             steps: int) -> list[dict]:
    """One row per parameter value; root-finder failures do not abort."""
    if param not in SCAN_PARAMS:
        raise ValueError(f"scan parameter must be one of {SCAN_PARAMS}")
    if steps < 1:
        raise ValueError("steps must be >= 1")
    e5 = -1 if cfg.eps5 is None else cfg.eps5
    start, stop = Fraction(start), Fraction(stop)
    values = [
        start + (stop - start) * Fraction(i, max(steps - 1, 1))
        for i in range(steps)
    ]
    rows = []
    for value in values:
        fields = {"ell": cfg.ell, "g": cfg.g, "vev": cfg.vev}
        fields[param] = value
        row = {
            "param": param,
            "value": str(value),
            "eps5": e5,
            "dispersion_heavy_k2": str(Fraction(-4 * e5) / Fraction(fields["ell"]) ** 2),
        }
        try:
            coupling = CouplingConfig(
                g=fields["g"], vev=fields["vev"], ell=fields["ell"], eps5=e5
            )
            spectrum = exact_mode_spectrum(coupling)
            row.update(
                light_k2=spectrum.light_k2,
                heavy_k2=spectrum.heavy_k2,
                leading_light_mass=spectrum.leading_light_mass,
                deviation=spectrum.deviation,
                status="ok",
                error=None,
            )
        except (RootFindingError, ValueError) as exc:
            row.update(
                light_k2=None, heavy_k2=None, leading_light_mass=None,
                deviation=None, status="error", error=str(exc),
            )
        rows.append(row)
    return rows


# -- umbrella -----------------------------------------------------------------


def cmd_check_all(cfg: RunConfig) -> list[CheckReport]:
    reports = []
    reports += cmd_verify_algebra(cfg)
    reports += cmd_verify_rep(cfg)
    reports += cmd_verify_clifford(cfg)
    reports += cmd_verify_planewave(cfg)
    reports += cmd_modes(cfg)
    reports += cmd_seesaw(cfg)
    return _sorted_reports(reports)


# -- serialization ------------------------------------------------------------


def config_dict(cfg: RunConfig) -> dict:
    out = {
        "eps4": cfg.eps4,
        "eps5": cfg.eps5,
        "ell": str(cfg.ell),
        "g": str(cfg.g),
        "vev": str(cfg.vev),
        "order": cfg.order,
        "seed": cfg.seed,
        "format": cfg.fmt,
    }
    if cfg.fixture:
        out["fixture"] = cfg.fixture
    return out


def report_dict(report: CheckReport) -> dict:
    return {
        "check": report.check,
        "params": _fmt(report.params),
        "status": report.status,
        "residual": _fmt(report.residual),
        "relation": report.relation,
        "details": _fmt(report.details),
        "duration_ms": _fmt(report.duration_ms),
    }


def reports_document(cfg: RunConfig, reports: list[CheckReport]) -> dict:
    passed = sum(1 for r in reports if r.passed)
    return {
        "config": config_dict(cfg),
        "reports": [report_dict(r) for r in reports],
        "summary": {
            "total": len(reports),
            "passed": passed,
            "failed": len(reports) - passed,
        },
    }


def render_json(document: dict) -> str:
    return json.dumps(document, sort_keys=True, indent=2) + "\n"


def render_reports_csv(reports: list[CheckReport]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(
        ["check", "params", "status", "residual", "relation", "duration_ms"]
    )
    for r in reports:
        params = ";".join(
            f"{k}={_fmt(v)}" for k, v in sorted(r.params.items())
        )
        writer.writerow(
            [r.check, params, r.status, _fmt(r.residual), r.relation,
             _fmt(r.duration_ms)]
        )
    return buf.getvalue()


def scan_document(cfg: RunConfig, rows: list[dict]) -> dict:
    return {
        "config": config_dict(cfg),
        "rows": [{k: _fmt(v) for k, v in row.items()} for row in rows],
    }


def render_scan_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(SCAN_COLUMNS)
    for row in rows:
        writer.writerow([_fmt(row.get(col)) for col in SCAN_COLUMNS])
    return buf.getvalue()
