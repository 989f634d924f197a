"""The full property and oracle suite behind `dropline verify`.

Each check pits an exact claim against an independent route: quadrature
against closed forms, search against explicit minimizers, algebraic
identities against brute evaluation on random configurations.  Checks are
deterministic given the seed and report their worst residual.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

import numpy as np

from . import exact, model, oracle
from .model import BoundaryCondition, ModelParams, Segment, Torus

ALL_BCS = (BoundaryCondition.NEUMANN, BoundaryCondition.DIRICHLET, BoundaryCondition.PERIODIC)


@dataclass
class CheckResult:
    name: str
    passed: bool
    worst: float
    detail: str
    records: list | None = None

    def to_dict(self) -> dict:
        d = {"name": self.name, "passed": self.passed, "worst": self.worst, "detail": self.detail}
        if self.records is not None:
            d["records"] = self.records
        return d


@dataclass
class SuiteConfig:
    seed: int = 0
    quad_sets_per_bc: int = 100
    identity_samples: int = 1000
    bound_samples: int = 1000
    sweep_points: int = 10_000
    oracle_instances: int = 6
    inject_perturbation: float = 0.0


@dataclass
class SuiteSummary:
    seed: int
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "seed": self.seed,
            "all_passed": self.all_passed,
            "n_checks": len(self.checks),
            "n_failed": sum(not c.passed for c in self.checks),
            "checks": [c.to_dict() for c in self.checks],
        }


def random_interval_set(
    rng: np.random.Generator,
    L: float,
    max_intervals: int = 4,
    torus: bool = False,
    mass: float | None = None,
) -> model.IntervalSet:
    """Random union of 1..max_intervals well-separated intervals in the box."""
    n = int(rng.integers(1, max_intervals + 1))
    fill = float(rng.uniform(0.15, 0.8)) if mass is None else mass / L
    lens = rng.exponential(size=n) + 0.05
    lens = lens / lens.sum() * fill * L
    gaps = rng.exponential(size=n + 1) + 0.05
    gaps = gaps / gaps.sum() * (1.0 - fill) * L
    pairs = []
    x = -L / 2.0
    for i in range(n):
        x += gaps[i]
        pairs.append((x, x + lens[i]))
        x += lens[i]
    domain = Torus(L) if torus else Segment(L)
    if torus:
        shift = float(rng.uniform(0.0, L))
        pairs = [(l + shift, r + shift) for l, r in pairs]
    return model.make_interval_set(pairs, domain)


def random_params(rng: np.random.Generator) -> ModelParams:
    return ModelParams(
        gamma=float(rng.uniform(0.3, 3.0)),
        rho=float(rng.uniform(0.15, 0.85)),
        L=float(rng.uniform(3.0, 15.0)),
    )


def _rel(err: float, scale: float) -> float:
    return abs(err) / (1.0 + abs(scale))


# ---------------------------------------------------------------------------
# individual checks
# ---------------------------------------------------------------------------


def check_closed_form_vs_quadrature(cfg: SuiteConfig) -> CheckResult:
    rng = np.random.default_rng(cfg.seed)
    spec = oracle.QuadratureSpec()
    worst = 0.0
    for bc in ALL_BCS:
        for _ in range(cfg.quad_sets_per_bc):
            p = random_params(rng)
            E = random_interval_set(rng, p.L, torus=(bc is BoundaryCondition.PERIODIC))
            closed = model.energy(E, p, bc).total + cfg.inject_perturbation
            quad = oracle.quad_energy(E, p, bc, spec)
            worst = max(worst, _rel(closed - quad, closed))
    return CheckResult(
        "closed-form-vs-quadrature",
        worst <= 1e-8,
        worst,
        f"{3 * cfg.quad_sets_per_bc} random sets, tolerance 1e-8 relative",
    )


def check_quadrature_paths_agree(cfg: SuiteConfig) -> CheckResult:
    rng = np.random.default_rng(cfg.seed + 1)
    spec = oracle.QuadratureSpec()
    worst = 0.0
    for bc in ALL_BCS:
        for _ in range(max(10, cfg.quad_sets_per_bc // 4)):
            p = random_params(rng)
            E = random_interval_set(rng, p.L, torus=(bc is BoundaryCondition.PERIODIC))
            a = oracle.quad_energy(E, p, bc, spec)
            b = oracle.cell_exact_energy(E, p, bc)
            worst = max(worst, abs(a - b))
    return CheckResult(
        "quadrature-two-paths-agree",
        worst <= 1e-9,
        worst,
        "Gauss tensor rule vs exact rectangle primitives, tolerance 1e-9 absolute",
    )


def check_completed_square_identity(cfg: SuiteConfig) -> CheckResult:
    rng = np.random.default_rng(cfg.seed + 2)
    worst = 0.0
    for _ in range(cfg.identity_samples):
        L = float(rng.uniform(2.0, 20.0))
        E = random_interval_set(rng, L, max_intervals=5)
        rho = float(rng.uniform(0.05, 1.0))
        sq, cu, bulk = model.completed_square_terms(E, rho)
        lhs = sq + cu + bulk
        rhs = model.interaction_with_background(E, rho)
        worst = max(worst, _rel(lhs - rhs, rhs))
        if sq < -1e-15:
            return CheckResult("completed-square-identity", False, sq, "square term went negative")
    return CheckResult(
        "completed-square-identity",
        worst <= 1e-12,
        worst,
        f"{cfg.identity_samples} random sets and rho values, tolerance 1e-12 relative",
    )


def check_cubic_sum_identity(cfg: SuiteConfig) -> CheckResult:
    rng = np.random.default_rng(cfg.seed + 3)
    worst = 0.0
    for _ in range(cfg.identity_samples):
        n = int(rng.integers(1, 51))
        q = list(rng.exponential(size=n) * float(rng.uniform(0.1, 10.0)))
        resid = model.cubic_sum_identity_residual(q)
        worst = max(worst, abs(resid) / max(sum(q) ** 3, 1e-300))
    return CheckResult(
        "cubic-sum-identity",
        worst <= 1e-12,
        worst,
        f"{cfg.identity_samples} random length lists up to 50 entries",
    )


def check_equal_spacing_lower_bound(cfg: SuiteConfig) -> CheckResult:
    rng = np.random.default_rng(cfg.seed + 4)
    worst_violation = 0.0
    for _ in range(cfg.bound_samples):
        L = float(rng.uniform(2.0, 20.0))
        E = random_interval_set(rng, L, max_intervals=5)
        rho = float(rng.uniform(0.05, 0.95))
        n = len(E.items)
        bound = model.pinned_lower_bound(E.mass, n, rho)
        val = model.interaction_with_background(E, rho)
        worst_violation = max(worst_violation, bound - val)
    # equality at the equally spaced equal-length configuration
    worst_eq = 0.0
    for _ in range(50):
        p = random_params(rng)
        n = int(rng.integers(1, 5))
        ell = p.rho * p.L
        try:
            E = exact.canonical_minimizer(p, n, ell)
        except exact.FitError:
            continue
        val = model.interaction_with_background(E, p.rho)
        bound = model.pinned_lower_bound(ell, n, p.rho)
        worst_eq = max(worst_eq, abs(val - bound))
    worst = max(worst_violation, worst_eq)
    return CheckResult(
        "equal-spacing-lower-bound",
        worst_violation <= 1e-10 and worst_eq <= 1e-10,
        worst,
        "interaction + rho * second moment against its sharp N-interval bound",
    )


def check_dense_background_lower_bound(cfg: SuiteConfig) -> CheckResult:
    rng = np.random.default_rng(cfg.seed + 5)
    worst_violation = 0.0
    for _ in range(cfg.bound_samples):
        L = float(rng.uniform(2.0, 20.0))
        E = random_interval_set(rng, L, max_intervals=5)
        rho = float(rng.uniform(1.0, 4.0))
        bound = model.pinned_lower_bound(E.mass, len(E.items), rho)
        val = model.interaction_with_background(E, rho)
        worst_violation = max(worst_violation, bound - val)
    # equality only for a single interval centered at the origin
    worst_eq = 0.0
    for _ in range(50):
        L = float(rng.uniform(2.0, 20.0))
        q = float(rng.uniform(0.1, 0.9)) * L
        E = model.make_interval_set([(-q / 2, q / 2)], Segment(L))
        rho = float(rng.uniform(1.0, 4.0))
        worst_eq = max(
            worst_eq,
            abs(model.interaction_with_background(E, rho) - model.pinned_lower_bound(q, 1, rho)),
        )
    worst = max(worst_violation, worst_eq)
    return CheckResult(
        "dense-background-lower-bound",
        worst_violation <= 1e-10 and worst_eq <= 1e-10,
        worst,
        "rho >= 1 bound (rho-2)/12 |E|^3 with equality at the centered interval",
    )


def check_translation_invariant_bound(cfg: SuiteConfig) -> CheckResult:
    rng = np.random.default_rng(cfg.seed + 6)
    worst_violation = 0.0
    worst_shift = 0.0
    for _ in range(cfg.bound_samples):
        L = float(rng.uniform(2.0, 20.0))
        E = random_interval_set(rng, L, max_intervals=4)
        rho = float(rng.uniform(0.05, 0.95))
        val = model.centered_interaction(E, rho)
        bound = model.pinned_lower_bound(E.mass, len(E.items), rho)
        worst_violation = max(worst_violation, bound - val)
        # both sides unchanged by translating E (as far as the box allows)
        lo = min(l for l, _ in E.endpoints())
        hi = max(r for _, r in E.endpoints())
        room_minus, room_plus = lo + L / 2.0, L / 2.0 - hi
        a = float(rng.uniform(-room_minus, room_plus))
        shifted = model.translate(E, a)
        worst_shift = max(worst_shift, _rel(model.centered_interaction(shifted, rho) - val, val))
    passed = worst_violation <= 1e-10 and worst_shift <= 1e-12
    return CheckResult(
        "translation-invariant-bound",
        passed,
        max(worst_violation, worst_shift),
        "first-moment-corrected interaction: sharp bound and exact translation invariance",
    )


def check_complement_reflection(cfg: SuiteConfig) -> CheckResult:
    rng = np.random.default_rng(cfg.seed + 7)
    worst_resid = 0.0
    worst_per = 0
    for _ in range(cfg.bound_samples):
        p = random_params(rng)
        E = random_interval_set(rng, p.L, max_intervals=4)
        Ec = model.complement(E)
        dper = model.perimeter(E) - model.perimeter(Ec)
        worst_per = max(worst_per, abs(dper))
        bc = ALL_BCS[int(rng.integers(0, 2))]  # segment kernels
        p_ref = replace(p, rho=1.0 - p.rho)
        lhs = model.energy(E, p, bc).total
        rhs = model.energy(Ec, p_ref, bc).total + dper
        worst_resid = max(worst_resid, _rel(lhs - rhs, lhs))
    passed = worst_per <= 2 and worst_resid <= 1e-10
    return CheckResult(
        "complement-reflection",
        passed,
        worst_resid,
        f"energy at density rho vs complement at 1-rho; max perimeter gap {worst_per}",
    )


def check_periodic_translation_invariance(cfg: SuiteConfig) -> CheckResult:
    rng = np.random.default_rng(cfg.seed + 8)
    worst = 0.0
    for _ in range(200):
        L = float(rng.uniform(3.0, 15.0))
        E = random_interval_set(rng, L, max_intervals=4, torus=True)
        rho = E.mass / L  # neutral charge
        if not 0.0 < rho < 1.0:
            continue
        p = ModelParams(gamma=float(rng.uniform(0.3, 3.0)), rho=rho, L=L)
        e0 = model.energy(E, p, BoundaryCondition.PERIODIC).total
        for _ in range(3):
            a = float(rng.uniform(0.0, L))
            e1 = model.energy(model.translate(E, a), p, BoundaryCondition.PERIODIC).total
            worst = max(worst, _rel(e1 - e0, e0))
    return CheckResult(
        "periodic-translation-invariance",
        worst <= 1e-12,
        worst,
        "neutral torus sets, energy constant under arbitrary rotation",
    )


def _bc_grid() -> list[ModelParams]:
    grid = []
    for gamma in (0.5, 1.0, 2.0):
        for rho in (0.3, 0.5, 0.7):
            for L in (5.0, 9.0, 13.0):
                grid.append(ModelParams(gamma, rho, L))
    return grid


def check_bc_ground_energy_agreement(cfg: SuiteConfig) -> CheckResult:
    worst = 0.0
    for p in _bc_grid():
        vals = []
        for bc in ALL_BCS:
            gs = exact.ground_state(p, bc)
            fam = gs.families[0]
            members = [fam.base]
            if bc is BoundaryCondition.DIRICHLET:
                members.append(fam.member(0.5 * fam.a_max))
            if bc is BoundaryCondition.PERIODIC:
                members.append(fam.member(0.37 * p.L))
            for E in members:
                vals.append(model.energy(E, p, bc).total)
        ref = vals[0]
        for v in vals[1:]:
            worst = max(worst, abs(v - ref) / abs(ref))
    return CheckResult(
        "bc-ground-energy-agreement",
        worst <= 1e-12,
        worst,
        "evaluated minimizer energies agree across the three kernels",
    )


def check_canonical_energy_formula(cfg: SuiteConfig) -> CheckResult:
    worst = 0.0
    for p in _bc_grid():
        for n in range(1, 21):
            e_formula = exact.energy_of_N(p, n)
            E = exact.canonical_minimizer(p, n, p.rho * p.L)
            e_eval = model.energy(E, p, BoundaryCondition.NEUMANN).total
            worst = max(worst, abs(e_formula - e_eval) / abs(e_formula))
    return CheckResult(
        "canonical-energy-formula",
        worst <= 1e-12,
        worst,
        "2N + gamma rho^2 (1-rho)^2 L^3 / (12 N^2) vs direct evaluation, N = 1..20",
    )


def check_tie_structure(cfg: SuiteConfig) -> CheckResult:
    p0 = ModelParams(1.0, 0.5, 1.0)
    beta = exact.asymptotics(p0).beta
    Ls = np.linspace(0.5 * beta, 100.0 * beta, cfg.sweep_points)
    c = p0.gamma * p0.rho ** 2 * (1 - p0.rho) ** 2 / 12.0
    Ns = np.arange(1, 120)
    energies = 2.0 * Ns[None, :] + c * Ls[:, None] ** 3 / Ns[None, :] ** 2
    mins = energies.min(axis=1)
    near = (energies <= mins[:, None] * (1.0 + 1e-9)).sum(axis=1)
    max_near = int(near.max())
    # exact tie lengths give exactly equal energies
    worst_tie = 0.0
    for n in (1, 2, 5, 11):
        p = replace(p0, L=exact.tie_length(p0, n))
        e1, e2 = exact.energy_of_N(p, n), exact.energy_of_N(p, n + 1)
        worst_tie = max(worst_tie, abs(e1 - e2) / abs(e1))
        if sorted(exact.optimal_N(p)) != [n, n + 1]:
            return CheckResult("tie-structure", False, worst_tie, f"tie at N={n} not detected")
    passed = max_near <= 2 and worst_tie <= 1e-12
    return CheckResult(
        "tie-structure",
        passed,
        worst_tie,
        f"never more than {max_near} near-optimal N on a {cfg.sweep_points}-point length sweep",
    )


def check_remainder_nonnegative(cfg: SuiteConfig) -> CheckResult:
    worst = math.inf
    for gamma, rho in ((1.0, 0.5), (0.7, 0.3), (2.0, 0.65)):
        p = ModelParams(gamma, rho, 1.0)
        asym = exact.asymptotics(p)
        Ls = np.linspace(0.5 * asym.beta, 100.0 * asym.beta, cfg.sweep_points)
        e, _ = exact.ground_energy_batch(gamma, rho, Ls)
        rem = Ls ** 2 * (e / Ls - asym.e_inf)
        worst = min(worst, float(rem.min()))
    return CheckResult(
        "remainder-nonnegative",
        worst >= -1e-9,
        worst,
        f"L^2 (e/L - e_inf) over {cfg.sweep_points} lengths in [beta/2, 100 beta], three parameter pairs",
    )


def check_excess_exactness(cfg: SuiteConfig) -> CheckResult:
    worst_attain = 0.0
    worst_slack = 0.0
    for gamma, rho, L in ((1.0, 0.5, 12.0), (1.0, 0.5, 40.0), (0.8, 0.35, 25.0)):
        p = ModelParams(gamma, rho, L)
        for Q in (-0.6, -0.2, 0.0, 0.2, 0.5, 1.0):
            res = exact.excess_ground_state(p, Q)
            if res.exact:
                e_eval = model.energy(res.minimizer, p, BoundaryCondition.NEUMANN).total
                worst_attain = max(worst_attain, abs(e_eval - res.lower_bound) / (1.0 + abs(res.lower_bound)))
            p_ref = replace(p, rho=1.0 - rho)
            refl = exact.excess_ground_state(p_ref, -Q)
            if res.exact and refl.exact:
                worst_slack = max(worst_slack, abs(res.lower_bound - refl.lower_bound))
    passed = worst_attain <= 1e-10 and worst_slack <= 2.0
    return CheckResult(
        "excess-exactness",
        passed,
        worst_attain,
        f"minimizer attains the bound; reflected problems differ by at most {worst_slack:.3f} <= 2",
    )


def check_f_profile_unimodal(cfg: SuiteConfig) -> CheckResult:
    xs = np.linspace(0.05, 20.0, 4000)
    fs = np.array([exact.f_profile(x) for x in xs])
    d = np.diff(fs)
    sign_changes = int(np.sum(np.sign(d[:-1]) * np.sign(d[1:]) < 0))
    fstar = (1.5) ** (2.0 / 3.0)
    min_excess = float(fs.min() - fstar)
    passed = sign_changes == 1 and min_excess >= -1e-12
    return CheckResult(
        "f-profile-unimodal",
        passed,
        min_excess,
        f"{sign_changes} sign change(s) in the finite differences; min f - (3/2)^(2/3) = {min_excess:.2e}",
    )


def check_limit_family_windows(cfg: SuiteConfig) -> CheckResult:
    worst = 0.0
    for gamma, rho in ((1.0, 0.5), (2.0, 0.3)):
        p0 = ModelParams(gamma, rho, 1.0)
        beta = exact.asymptotics(p0).beta
        fam_odd, fam_even = exact.limit_families(p0)
        for n in (5, 10, 20):
            p = replace(p0, L=n * beta)
            E = exact.canonical_minimizer(p, n, p.rho * p.L)
            fam = fam_odd if n % 2 == 1 else fam_even
            # collect generator intervals covering the box
            gen = []
            m = int(math.ceil(0.5 * p.L / beta)) + 1
            for j in range(-m, m + 1):
                l, r = fam.interval(j)
                if r > -p.L / 2 and l < p.L / 2:
                    gen.append((l, r))
            gen.sort()
            ours = E.endpoints()
            if len(gen) != len(ours):
                return CheckResult(
                    "limit-family-windows", False, float(abs(len(gen) - len(ours))),
                    f"piece count mismatch at N={n}",
                )
            for (l1, r1), (l2, r2) in zip(ours, gen):
                worst = max(worst, abs(l1 - l2), abs(r1 - r2))
    return CheckResult(
        "limit-family-windows",
        worst <= 1e-9,
        worst,
        "finite minimizers at L = N beta coincide with the periodic limit generators",
    )


def _oracle_instances(cfg: SuiteConfig) -> list[tuple[ModelParams, BoundaryCondition, float]]:
    inst = [
        (ModelParams(1.0, 0.5, 12.0), BoundaryCondition.NEUMANN, 6.0),
        (ModelParams(1.0, 0.5, 8.0), BoundaryCondition.NEUMANN, 4.0),
        (ModelParams(1.0, 0.3, 10.0), BoundaryCondition.NEUMANN, 3.0),
        (ModelParams(2.0, 0.7, 7.0), BoundaryCondition.DIRICHLET, 4.9),
        (ModelParams(1.0, 0.5, 12.0), BoundaryCondition.PERIODIC, 6.0),
        (ModelParams(0.5, 0.4, 9.0), BoundaryCondition.NEUMANN, 3.6),
    ]
    return inst[: max(1, cfg.oracle_instances)]


def check_oracle_ground_state(cfg: SuiteConfig) -> CheckResult:
    records = []
    worst_gap = -math.inf
    worst_end = 0.0
    all_ok = True
    for p, bc, ell in _oracle_instances(cfg):
        neutral = abs(ell - p.rho * p.L) <= 1e-12 * p.L
        if neutral:
            e_exact = exact.ground_energy(p)
            base = exact.ground_state(p, bc).families[-1].base
        else:
            res = exact.excess_ground_state(p, ell - p.rho * p.L)
            e_exact, base = res.lower_bound, res.minimizer
        spec = oracle.SearchSpec(n_intervals=1, mass=ell, seed=cfg.seed)
        E, e_oracle, n = oracle.minimize_global(p, bc, ell, spec=spec)
        gap = e_oracle - e_exact
        end_err = 0.0
        if base is not None and len(base.items) == len(E.items) and bc is BoundaryCondition.NEUMANN:
            end_err = max(
                max(abs(a - c), abs(b - d)) for (a, b), (c, d) in zip(E.endpoints(), base.endpoints())
            )
        ok = (-1e-9 <= gap <= 1e-5) and end_err <= 1e-3 * p.L
        all_ok = all_ok and ok
        worst_gap = max(worst_gap, gap)
        worst_end = max(worst_end, end_err)
        records.append(
            {
                "params": {"gamma": p.gamma, "rho": p.rho, "L": p.L, "ell": ell},
                "bc": bc.value,
                "exact_energy": e_exact,
                "oracle_energy": e_oracle,
                "gap": gap,
                "endpoint_error": end_err,
                "passed": ok,
            }
        )
    return CheckResult(
        "oracle-recovers-ground-state",
        all_ok,
        worst_gap,
        f"search never beats the proven optimum and lands within 1e-5; worst endpoint error {worst_end:.2e}",
        records=records,
    )


def check_oracle_determinism(cfg: SuiteConfig) -> CheckResult:
    p = ModelParams(1.0, 0.5, 12.0)
    spec = oracle.SearchSpec(n_intervals=2, mass=6.0, seed=cfg.seed + 17)
    E1, e1 = oracle.minimize_fixed_N(p, BoundaryCondition.NEUMANN, spec)
    E2, e2 = oracle.minimize_fixed_N(p, BoundaryCondition.NEUMANN, spec)
    identical = e1 == e2 and E1.endpoints() == E2.endpoints()
    return CheckResult(
        "oracle-determinism",
        identical,
        0.0 if identical else abs(e1 - e2),
        "identical seed reproduces bit-identical search results",
    )


def check_translation_flatness(cfg: SuiteConfig) -> CheckResult:
    p = ModelParams(1.0, 0.5, 12.0)
    base = exact.canonical_minimizer(p, 2, 6.0)
    flat_periodic = oracle.translation_flatness(
        model.translate(model.to_torus(base), 1.3), p, BoundaryCondition.PERIODIC
    )
    off_center = model.translate(base, 0.5)
    rise_neumann = oracle.translation_flatness(off_center, p, BoundaryCondition.NEUMANN, h=1e-4 * p.L)
    passed = flat_periodic < 1e-10 and rise_neumann > 1e-8
    return CheckResult(
        "translation-flatness",
        passed,
        flat_periodic,
        f"periodic direction flat ({flat_periodic:.2e}); Neumann rises off-center ({rise_neumann:.2e})",
    )


def check_dirichlet_families(cfg: SuiteConfig) -> CheckResult:
    worst = 0.0
    for p in (ModelParams(1.0, 0.5, 12.0), ModelParams(2.0, 0.3, 9.0)):
        gs = exact.ground_state(p, BoundaryCondition.DIRICHLET)
        fam = gs.families[0]
        for a in np.linspace(fam.a_min, fam.a_max, 20):
            e = model.energy(fam.member(float(a)), p, BoundaryCondition.DIRICHLET).total
            worst = max(worst, abs(e - gs.energy) / abs(gs.energy))
    return CheckResult(
        "dirichlet-family-constancy",
        worst <= 1e-12,
        worst,
        "Dirichlet energy constant over the within-box translation range",
    )


def report_dirichlet_extended_range(cfg: SuiteConfig) -> CheckResult:
    rows = exact.dirichlet_extended_report(ModelParams(1.0, 0.5, 12.0))
    return CheckResult(
        "dirichlet-extended-range-report",
        True,
        0.0,
        "energies of translations beyond the box, three interpretations, no assertion made",
        records=rows,
    )


ALL_CHECKS = [
    check_closed_form_vs_quadrature,
    check_quadrature_paths_agree,
    check_completed_square_identity,
    check_cubic_sum_identity,
    check_equal_spacing_lower_bound,
    check_dense_background_lower_bound,
    check_translation_invariant_bound,
    check_complement_reflection,
    check_periodic_translation_invariance,
    check_bc_ground_energy_agreement,
    check_canonical_energy_formula,
    check_tie_structure,
    check_remainder_nonnegative,
    check_excess_exactness,
    check_f_profile_unimodal,
    check_limit_family_windows,
    check_oracle_ground_state,
    check_oracle_determinism,
    check_translation_flatness,
    check_dirichlet_families,
    report_dirichlet_extended_range,
]


def run_suite(cfg: SuiteConfig | None = None) -> SuiteSummary:
    """Run every check and collect the summary (deterministic given cfg.seed)."""
    cfg = cfg or SuiteConfig()
    summary = SuiteSummary(seed=cfg.seed)
    for check in ALL_CHECKS:
        summary.checks.append(check(cfg))
    return summary
