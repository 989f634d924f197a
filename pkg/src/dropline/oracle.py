"""Independent numerical verification: quadrature and derivative-free search.

Nothing here trusts the explicit solutions.  The interaction integral is
evaluated on the grid of rectangles induced by the interval endpoints,
splitting diagonal cells along the kink of |x-y| (Gauss tensor rule), with a
second semi-analytic route through exact rectangle primitives.  Ground
states are re-derived by seeded pattern search over gap/length simplexes,
one interval count at a time.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .model import (
    BoundaryCondition,
    DomainError,
    IntervalSet,
    ModelParams,
    Segment,
    Torus,
    energy,
    make_interval_set,
    perimeter,
    to_torus,
    translate,
)


class ToleranceError(RuntimeError):
    """Subdivision budget exhausted before reaching the target tolerance."""


class InfeasibleError(ValueError):
    """Search constraints cannot be satisfied (mass too large, too many pieces)."""


@dataclass(frozen=True)
class QuadratureSpec:
    order: int = 16
    target_abs_tol: float = 1e-10
    max_subdivisions: int = 8

    def __post_init__(self):
        if self.order < 2:
            raise ValueError("quadrature order must be at least 2")
        if not self.target_abs_tol > 0:
            raise ValueError("target_abs_tol must be positive")
        if self.max_subdivisions < 1:
            raise ValueError("max_subdivisions must be at least 1")


@dataclass(frozen=True)
class SearchSpec:
    n_intervals: int
    mass: float
    restarts: int = 6
    seed: int = 0
    energy_tol: float = 1e-9
    max_iters: int = 600

    def __post_init__(self):
        if self.n_intervals < 1:
            raise ValueError("n_intervals must be a positive integer")
        if not self.mass > 0:
            raise ValueError("mass must be positive")
        if self.restarts < 1:
            raise ValueError("restarts must be at least 1")
        if not self.energy_tol > 0:
            raise ValueError("energy_tol must be positive")
        if self.max_iters < 1:
            raise ValueError("max_iters must be positive")


def _gauss_rule(order: int) -> tuple[np.ndarray, np.ndarray]:
    return np.polynomial.legendre.leggauss(order)


def _base_breaks(E: IntervalSet, L: float) -> np.ndarray:
    pts = [-L / 2.0, L / 2.0]
    for l, r in E.endpoints():
        pts.extend((l, r))
    pts = sorted(pts)
    out = [pts[0]]
    for x in pts[1:]:
        if x - out[-1] > 1e-14 * L:
            out.append(x)
    out[-1] = L / 2.0
    return np.array(out)


def _refine(breaks: np.ndarray, level: int) -> np.ndarray:
    for _ in range(level):
        mids = 0.5 * (breaks[:-1] + breaks[1:])
        breaks = np.sort(np.concatenate([breaks, mids]))
    return breaks


def _charge_values(breaks: np.ndarray, E: IntervalSet, rho: float) -> np.ndarray:
    mids = 0.5 * (breaks[:-1] + breaks[1:])
    inside = np.zeros(mids.shape, dtype=bool)
    for l, r in E.endpoints():
        inside |= (mids >= l) & (mids <= r)
    return np.where(inside, 1.0 - rho, -rho)


def _abs_kernel_matrix(breaks: np.ndarray, order: int) -> np.ndarray:
    """K[i, j] = iint over cell_i x cell_j of |x - y|, by tensor Gauss.

    Off-diagonal cells have disjoint interiors, so |x-y| is linear there and
    the rule is exact.  Diagonal cells are split along x = y and each triangle
    is mapped to a square (the Jacobian keeps the integrand polynomial).
    """
    t, w = _gauss_rule(order)
    a = breaks[:-1]
    h = np.diff(breaks)
    # nodes and weights per cell, shape (m, order)
    xs = a[:, None] + (t[None, :] + 1.0) * 0.5 * h[:, None]
    ws = w[None, :] * 0.5 * h[:, None]
    xf = xs.ravel()
    wf = ws.ravel()
    D = np.abs(xf[:, None] - xf[None, :]) * (wf[:, None] * wf[None, :])
    m, n = xs.shape
    K = D.reshape(m, n, m, n).sum(axis=(1, 3))
    # diagonal cells via the split x>y triangle, doubled by symmetry:
    # iint_{cell^2} |x-y| = 2 int_a^b dx int_a^x (x - y) dy; with y = a + s(x-a)
    # the integrand times the Jacobian is (x-a)^2 (1-s).
    u = (t + 1.0) * 0.5  # nodes on [0, 1]
    wu = w * 0.5
    x_rel = (t[None, :] + 1.0) * 0.5 * h[:, None]  # x - a per cell
    inner = float(np.sum(wu * (1.0 - u)))
    diag = 2.0 * inner * np.sum(ws * x_rel ** 2, axis=1)
    np.fill_diagonal(K, diag)
    return K


def _interaction_on_breaks(
    breaks: np.ndarray, mu: np.ndarray, bc: BoundaryCondition, L: float, order: int
) -> float:
    """iint mu(x) k(x, y) mu(y) dx dy with k = -|x-y|/2 (-xy/L for Dirichlet/periodic)."""
    K = _abs_kernel_matrix(breaks, order)
    val = -0.5 * float(mu @ K @ mu)
    if bc is not BoundaryCondition.NEUMANN:
        x1 = 0.5 * (breaks[1:] ** 2 - breaks[:-1] ** 2)  # int_cell x dx, exact
        s1 = float(np.dot(mu, x1))
        val -= s1 * s1 / L
    return val


def quad_energy(
    E: IntervalSet,
    p: ModelParams,
    bc: BoundaryCondition,
    spec: QuadratureSpec = QuadratureSpec(),
) -> float:
    """Energy of E by numerical quadrature of the kernel double integral.

    Refines dyadically until the energy estimate moves by less than
    target_abs_tol; raises ToleranceError if the budget runs out.
    """
    if abs(E.domain.L - p.L) > 1e-9 * p.L:
        raise DomainError("set domain length does not match the model box length")
    if isinstance(E.domain, Torus) and bc is not BoundaryCondition.PERIODIC:
        raise DomainError("torus sets require the periodic kernel")
    per = perimeter(to_torus(E)) if bc is BoundaryCondition.PERIODIC else perimeter(E)
    base = _base_breaks(E, p.L)
    prev = None
    for level in range(spec.max_subdivisions + 1):
        breaks = _refine(base, level)
        mu = _charge_values(breaks, E, p.rho)
        val = per + p.gamma * _interaction_on_breaks(breaks, mu, bc, p.L, spec.order)
        if prev is not None and abs(val - prev) < spec.target_abs_tol:
            return val
        prev = val
    raise ToleranceError(
        f"estimate still moving by more than {spec.target_abs_tol:g} "
        f"after {spec.max_subdivisions} subdivisions"
    )


def quad_self_interaction(E: IntervalSet, spec: QuadratureSpec = QuadratureSpec()) -> float:
    """-1/2 iint_{ExE} |x-y| by quadrature (charge 1 on E, 0 outside)."""
    if not isinstance(E.domain, Segment):
        raise DomainError("self-interaction quadrature expects a segment set")
    base = _base_breaks(E, E.domain.L)
    prev = None
    for level in range(spec.max_subdivisions + 1):
        breaks = _refine(base, level)
        mids = 0.5 * (breaks[:-1] + breaks[1:])
        mu = np.zeros(mids.shape)
        for l, r in E.endpoints():
            mu[(mids >= l) & (mids <= r)] = 1.0
        K = _abs_kernel_matrix(breaks, spec.order)
        val = -0.5 * float(mu @ K @ mu)
        if prev is not None and abs(val - prev) < spec.target_abs_tol:
            return val
        prev = val
    raise ToleranceError("self-interaction quadrature did not settle")


def cell_exact_energy(E: IntervalSet, p: ModelParams, bc: BoundaryCondition) -> float:
    """Semi-analytic energy: exact rectangle primitives instead of Gauss nodes.

    iint over [a,b] x [c,d] of |x-y| equals
    (|b-c|^3 - |b-d|^3 - |a-c|^3 + |a-d|^3) / 6, and the -xy/L term separates
    into one-dimensional moments.  Same cell decomposition as quad_energy,
    different integration route; the two must agree.
    """
    if abs(E.domain.L - p.L) > 1e-9 * p.L:
        raise DomainError("set domain length does not match the model box length")
    if isinstance(E.domain, Torus) and bc is not BoundaryCondition.PERIODIC:
        raise DomainError("torus sets require the periodic kernel")
    per = perimeter(to_torus(E)) if bc is BoundaryCondition.PERIODIC else perimeter(E)
    breaks = _base_breaks(E, p.L)
    mu = _charge_values(breaks, E, p.rho)
    a, b = breaks[:-1], breaks[1:]

    def cube(u: np.ndarray) -> np.ndarray:
        return np.abs(u) ** 3

    K = (
        cube(b[:, None] - a[None, :])
        - cube(b[:, None] - b[None, :])
        - cube(a[:, None] - a[None, :])
        + cube(a[:, None] - b[None, :])
    ) / 6.0
    val = -0.5 * float(mu @ K @ mu)
    if bc is not BoundaryCondition.NEUMANN:
        x1 = 0.5 * (b ** 2 - a ** 2)
        s1 = float(np.dot(mu, x1))
        val -= s1 * s1 / p.L
    return per + p.gamma * val


# ---------------------------------------------------------------------------
# Derivative-free minimization over interval configurations
# ---------------------------------------------------------------------------


def _config_energy(gaps: list[float], lens: list[float], p: ModelParams, bc: BoundaryCondition) -> float:
    """Closed-form energy of the configuration described by gaps and lengths.

    The walk starts at -L/2: gap_0, piece_1, gap_1, ..., piece_N, gap_N.
    The perimeter is fixed at 2N (fixed-N search semantics)."""
    gamma, rho, L = p.gamma, p.rho, p.L
    total = 0.0
    for q in lens:
        total += q
    x = -L / 2.0
    prefix = 0.0
    cross = first = second = cubes = 0.0
    for i, q in enumerate(lens):
        x += gaps[i]
        c = x + 0.5 * q
        suffix = total - prefix - q
        cross += q * c * (prefix - suffix)
        first += q * c
        second += q * c * c + q * q * q / 12.0
        cubes += q * q * q
        prefix += q
        x += q
    self_term = -cross - cubes / 6.0
    background = rho * second + 0.25 * rho * total * L * L - rho * rho * L ** 3 / 6.0
    e = 2.0 * len(lens) + gamma * (self_term + background)
    if bc is not BoundaryCondition.NEUMANN:
        e -= gamma / L * first * first
    return e


def _simplex_sample(rng: np.random.Generator, k: int) -> np.ndarray:
    w = rng.exponential(size=k)
    return w / w.sum()


def _transfer_pairs(k: int) -> list[tuple[int, int]]:
    pairs = [(i, i + 1) for i in range(k - 1)]
    if k > 2:
        pairs.append((0, k - 1))
    return pairs


def _pattern_search(
    gaps: list[float],
    lens: list[float],
    p: ModelParams,
    bc: BoundaryCondition,
    floor_len: float,
    max_iters: int,
) -> tuple[list[float], list[float], float]:
    """Pattern search over the two simplexes (gap sums and length sums fixed).

    Moves transfer step mass between two coordinates of the same block, which
    stays exactly on the constraint set; donors are floored at zero (gaps) or
    at the minimal length (pieces).  Shrinks the step by half whenever no
    transfer improves, and stops below 1e-8 * L.
    """
    L = p.L
    n = len(lens)
    step = L / (4.0 * n)
    min_step = 1e-8 * L
    e = _config_energy(gaps, lens, p, bc)
    gap_pairs = _transfer_pairs(len(gaps))
    len_pairs = _transfer_pairs(n) if n > 1 else []
    for _ in range(max_iters):
        if step < min_step:
            break
        best_e = e
        best = None
        for block, pairs, lo in ((gaps, gap_pairs, 0.0), (lens, len_pairs, floor_len)):
            for i, j in pairs:
                for src, dst in ((i, j), (j, i)):
                    amt = min(step, block[src] - lo)
                    if amt <= 0.0:
                        continue
                    old_src, old_dst = block[src], block[dst]
                    block[src] = old_src - amt
                    block[dst] = old_dst + amt
                    cand = _config_energy(gaps, lens, p, bc)
                    block[src], block[dst] = old_src, old_dst
                    if cand < best_e:
                        best_e = cand
                        best = (block, src, dst, amt)
        if best is None:
            step *= 0.5
        else:
            block, src, dst, amt = best
            block[src] -= amt
            block[dst] += amt
            e = best_e
    return gaps, lens, e


def minimize_fixed_N(
    p: ModelParams, bc: BoundaryCondition, spec: SearchSpec
) -> tuple[IntervalSet, float]:
    """Best configuration of exactly spec.n_intervals pieces with total mass
    spec.mass, by seeded multistart pattern search.  Deterministic given seed."""
    n, ell = spec.n_intervals, spec.mass
    L = p.L
    if ell > L * (1.0 + 1e-12):
        raise InfeasibleError(f"mass {ell:.6g} exceeds the box length {L:.6g}")
    floor_len = 1e-9 * L
    if n * floor_len > ell:
        raise InfeasibleError(f"{n} pieces cannot carry mass {ell:.6g}")
    gap_total = max(L - ell, 0.0)
    rng = np.random.default_rng(spec.seed)
    best_gaps = best_lens = None
    best_e = math.inf
    for _ in range(spec.restarts):
        gaps = list(_simplex_sample(rng, n + 1) * gap_total)
        lens = list(floor_len + _simplex_sample(rng, n) * (ell - n * floor_len))
        gaps, lens, e = _pattern_search(gaps, lens, p, bc, floor_len, spec.max_iters)
        if e < best_e:
            best_e, best_gaps, best_lens = e, gaps, lens
    pairs = []
    x = -L / 2.0
    for i, q in enumerate(best_lens):
        x += best_gaps[i]
        pairs.append((x, x + q))
        x += q
    E = make_interval_set(pairs, Segment(L))
    return E, energy(E, p, bc).total


def _energy_floor(p: ModelParams, bc: BoundaryCondition, ell: float, n: int) -> float:
    """Sound lower bound on the energy of any n-piece configuration of mass ell.

    For neutral charge the Coulomb term is nonnegative (-|x| is conditionally
    positive definite, and the Dirichlet kernel is positive definite outright),
    so 2n alone bounds the energy below.  Off neutrality the bound degrades by
    explicit charge-imbalance penalties.  Used only to prune the N loop."""
    gamma, L = p.gamma, p.L
    q_exc = ell - p.rho * L
    if abs(q_exc) <= 1e-12 * L:
        return 2.0 * n
    if bc is BoundaryCondition.DIRICHLET:
        return 2.0 * n - gamma * L * q_exc ** 2 / 4.0
    if bc is BoundaryCondition.PERIODIC:
        return 2.0 * n - gamma * (q_exc ** 2 * L / 12.0 + abs(q_exc) * L * L / 12.0)
    c = abs(q_exc) / L
    return 2.0 * n - gamma * L ** 3 * (2.0 * c + c * c) / 6.0


def minimize_global(
    p: ModelParams,
    bc: BoundaryCondition,
    ell: float,
    N_max: int | None = None,
    spec: SearchSpec | None = None,
) -> tuple[IntervalSet, float, int]:
    """Minimize over the number of pieces as well: loops minimize_fixed_N for
    N = 1..N_max (default covers three times the continuous optimum, plus two)
    and returns the best configuration, its energy and its N."""
    if spec is None:
        spec = SearchSpec(n_intervals=1, mass=ell)
    B = p.gamma * (1.0 - p.rho) ** 2 * ell ** 3 / (12.0 * p.rho)
    nstar = B ** (1.0 / 3.0)
    auto = math.ceil(3.0 * nstar) + 2
    nmax = auto if N_max is None else max(N_max, 1)
    best: tuple[IntervalSet, float, int] | None = None
    for n in range(1, nmax + 1):
        if best is not None and _energy_floor(p, bc, ell, n) >= best[1]:
            break
        sub = replace(spec, n_intervals=n, mass=ell, seed=spec.seed + 7919 * n)
        E, e = minimize_fixed_N(p, bc, sub)
        if best is None or e < best[1]:
            best = (E, e, n)
    return best


def translation_flatness(
    E: IntervalSet, p: ModelParams, bc: BoundaryCondition, h: float | None = None
) -> float:
    """Max energy change under translating E by +-h.

    Zero (to rounding) for the periodic kernel on neutral sets; strictly
    positive for Neumann away from the centered configuration.  Segment sets
    must have room to move by h on both sides."""
    if h is None:
        h = 1e-6 * p.L
    if bc is BoundaryCondition.PERIODIC:
        base = to_torus(E)
    else:
        base = E
    e0 = energy(base, p, bc).total
    worst = 0.0
    for s in (h, -h):
        worst = max(worst, abs(energy(translate(base, s), p, bc).total - e0))
    return worst
