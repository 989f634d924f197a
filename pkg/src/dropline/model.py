"""Core types and closed-form energies for finite unions of intervals.

A configuration is a finite union of intervals with disjoint closures,
either inside a box [-L/2, L/2] or on a circle of circumference L, immersed
in a uniform neutralizing background of density rho.  The energy balances
perimeter (two boundary points per component) against a repulsive
Coulomb-like interaction; Dirichlet and periodic boundary kernels add a
first-moment correction -(gamma/L) (int_E x dx)^2.

Everything in this module evaluates exactly, as polynomials in the interval
centers x_n and lengths q_n.  The independent numerical route lives in
`dropline.oracle`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum


class DomainError(ValueError):
    """Set does not fit its domain, or domain and boundary condition clash."""


class OverlapError(ValueError):
    """Interval interiors overlap beyond the merge tolerance."""


class BoundaryCondition(Enum):
    NEUMANN = "neumann"
    DIRICHLET = "dirichlet"
    PERIODIC = "periodic"

    @classmethod
    def parse(cls, name: str) -> "BoundaryCondition":
        try:
            return cls(name.strip().lower())
        except ValueError:
            raise ValueError(
                f"unknown boundary condition {name!r} (expected neumann, dirichlet or periodic)"
            ) from None


@dataclass(frozen=True)
class Segment:
    """The box [-L/2, L/2]."""

    L: float

    def __post_init__(self):
        if not self.L > 0:
            raise ValueError("segment length must be positive")


@dataclass(frozen=True)
class Torus:
    """The circle R/LZ, represented on the cut [-L/2, L/2]."""

    L: float

    def __post_init__(self):
        if not self.L > 0:
            raise ValueError("torus circumference must be positive")


Domain = Segment | Torus


@dataclass(frozen=True)
class ModelParams:
    """Model constants: interaction strength gamma, background density rho, box length L."""

    gamma: float
    rho: float
    L: float

    def __post_init__(self):
        if not self.gamma > 0:
            raise ValueError("gamma must be positive")
        if not 0.0 < self.rho < 1.0:
            raise ValueError("rho must lie in (0, 1)")
        if not self.L > 0:
            raise ValueError("L must be positive")


def default_merge_tol(L: float) -> float:
    return 1e-12 * L


@dataclass(frozen=True)
class IntervalSet:
    """Finite union of intervals with disjoint closures, canonically ordered.

    Pieces are stored as (center, length) pairs with strictly increasing
    centers, all contained in the cut [-L/2, L/2].  On a torus, a component
    crossing the cut is stored split in two raw pieces and `wrap_joined` is
    set, so it counts as a single component for the perimeter.
    """

    domain: Domain
    items: tuple[tuple[float, float], ...]
    wrap_joined: bool = False

    def __post_init__(self):
        L = self.domain.L
        tol = default_merge_tol(L)
        prev_right = None
        for x, q in self.items:
            if not q > 0:
                raise ValueError("interval lengths must be positive")
            left, right = x - q / 2.0, x + q / 2.0
            if left < -L / 2.0 - tol or right > L / 2.0 + tol:
                raise DomainError("interval outside the fundamental domain")
            if prev_right is not None and left < prev_right - tol:
                raise OverlapError("interval closures overlap")
            prev_right = right
        if self.mass > L + tol:
            raise OverlapError("total measure exceeds the domain length")
        if self.wrap_joined:
            if not isinstance(self.domain, Torus) or len(self.items) < 2:
                raise DomainError("wrap flag requires a torus set with at least two pieces")

    @property
    def mass(self) -> float:
        return sum(q for _, q in self.items)

    @property
    def centers(self) -> tuple[float, ...]:
        return tuple(x for x, _ in self.items)

    @property
    def lengths(self) -> tuple[float, ...]:
        return tuple(q for _, q in self.items)

    @property
    def n_components(self) -> int:
        n = len(self.items)
        if n == 0:
            return 0
        if isinstance(self.domain, Torus):
            if n == 1 and self.items[0][1] >= self.domain.L - default_merge_tol(self.domain.L):
                return 1  # whole circle
            return n - (1 if self.wrap_joined else 0)
        return n

    def endpoints(self) -> list[tuple[float, float]]:
        """Raw pieces as (left, right) pairs on the cut."""
        return [(x - q / 2.0, x + q / 2.0) for x, q in self.items]


@dataclass(frozen=True)
class EnergyBreakdown:
    """Energy split into its exact closed-form contributions.

    total = perimeter + gamma*(self_term + background_term) + moment_correction
    """

    perimeter: int
    self_term: float
    background_term: float
    moment_correction: float
    total: float

    def to_dict(self) -> dict:
        return {
            "perimeter": self.perimeter,
            "self_term": self.self_term,
            "background_term": self.background_term,
            "moment_correction": self.moment_correction,
            "total": self.total,
        }


def make_interval_set(
    endpoints: list[tuple[float, float]],
    domain: Domain,
    merge_tol: float | None = None,
) -> IntervalSet:
    """Build a canonical IntervalSet from (left, right) pairs.

    Pieces whose closures touch within merge_tol are merged; pieces shorter
    than merge_tol are dropped.  On a torus, inputs may cross the cut at
    -L/2 (or be given in any shifted coordinates); a component crossing the
    cut is stored split but counted once.

    Raises OverlapError if interiors overlap beyond merge_tol and
    DomainError if a piece leaves a segment domain.
    """
    L = domain.L
    tol = default_merge_tol(L) if merge_tol is None else merge_tol
    on_torus = isinstance(domain, Torus)

    pieces: list[list[float]] = []
    for left, right in endpoints:
        left, right = float(left), float(right)
        if not right > left:
            raise ValueError(f"interval ({left}, {right}) has nonpositive width")
        width = right - left
        if width <= tol:
            continue
        if on_torus:
            if width > L + tol:
                raise OverlapError("interval longer than the circle")
            width = min(width, L)
            l0 = math.fmod(left + L / 2.0, L)
            if l0 < 0:
                l0 += L
            l0 -= L / 2.0  # now in [-L/2, L/2)
            r0 = l0 + width
            if r0 > L / 2.0 + tol:
                pieces.append([l0, L / 2.0])
                pieces.append([-L / 2.0, r0 - L])
            else:
                pieces.append([l0, min(r0, L / 2.0)])
        else:
            if left < -L / 2.0 - tol or right > L / 2.0 + tol:
                raise DomainError(f"interval ({left}, {right}) outside [-{L / 2}, {L / 2}]")
            pieces.append([max(left, -L / 2.0), min(right, L / 2.0)])

    pieces.sort()
    merged: list[list[float]] = []
    for left, right in pieces:
        if merged and left <= merged[-1][1] + tol:
            if left < merged[-1][1] - tol:
                raise OverlapError("interval interiors overlap")
            merged[-1][1] = max(merged[-1][1], right)
        else:
            merged.append([left, right])

    wrap = False
    if on_torus and len(merged) >= 2:
        touches_low = merged[0][0] <= -L / 2.0 + tol
        touches_high = merged[-1][1] >= L / 2.0 - tol
        wrap = touches_low and touches_high

    items = tuple(((l + r) / 2.0, r - l) for l, r in merged)
    return IntervalSet(domain=domain, items=items, wrap_joined=wrap)


def perimeter(E: IntervalSet) -> int:
    """Twice the number of connected components (torus components counted mod wrap)."""
    n = E.n_components
    if isinstance(E.domain, Torus) and n == 1 and E.mass >= E.domain.L - default_merge_tol(E.domain.L):
        return 0  # the whole circle has no boundary
    return 2 * n


def _sums(items) -> tuple[float, float, float, float]:
    """(mass, first moment, second moment, sum of cubed lengths) of the pieces."""
    mass = first = second = cubes = 0.0
    for x, q in items:
        mass += q
        first += q * x
        second += q * x * x + q * q * q / 12.0
        cubes += q * q * q
    return mass, first, second, cubes


def _self_interaction(items) -> float:
    # -1/2 iint_{ExE} |x-y| = -sum_{n<m} q_n q_m (x_m - x_n) - (1/6) sum_n q_n^3
    # for ordered centers; the cross sum telescopes with prefix/suffix masses.
    total = sum(q for _, q in items)
    cross = 0.0
    cubes = 0.0
    prefix = 0.0
    for x, q in items:
        suffix = total - prefix - q
        cross += q * x * (prefix - suffix)
        cubes += q * q * q
        prefix += q
    return -cross - cubes / 6.0


def self_interaction(E: IntervalSet) -> float:
    """-1/2 iint_{ExE} |x-y| dx dy, exactly."""
    if not isinstance(E.domain, Segment):
        raise DomainError("self_interaction is defined on segment sets; use energy() for torus sets")
    return _self_interaction(E.items)


def moments(E: IntervalSet) -> tuple[float, float, float]:
    """(|E|, int_E x dx, int_E x^2 dx)."""
    if not isinstance(E.domain, Segment):
        raise DomainError("moments are defined on segment sets")
    mass, first, second, _ = _sums(E.items)
    return mass, first, second


def _breakdown(items, per: int, p: ModelParams, bc: BoundaryCondition) -> EnergyBreakdown:
    gamma, rho, L = p.gamma, p.rho, p.L
    mass, first, second, _ = _sums(items)
    self_term = _self_interaction(items)
    background = rho * second + 0.25 * rho * mass * L * L - rho * rho * L ** 3 / 6.0
    if bc is BoundaryCondition.NEUMANN:
        correction = 0.0
    else:
        # The background first moment over the symmetric box vanishes, so the
        # kernel's -xy/L term contributes -(gamma/L)(int_E x dx)^2.
        correction = -(gamma / L) * first * first
    total = per + gamma * (self_term + background) + correction
    return EnergyBreakdown(
        perimeter=per,
        self_term=self_term,
        background_term=background,
        moment_correction=correction,
        total=total,
    )


def energy(E: IntervalSet, p: ModelParams, bc: BoundaryCondition) -> EnergyBreakdown:
    """Exact energy of E under the given boundary kernel.

    Neumann and Dirichlet require a segment set.  Periodic accepts segment
    or torus sets and evaluates on the representative cut with the torus
    perimeter convention.
    """
    if abs(E.domain.L - p.L) > 1e-9 * p.L:
        raise DomainError("set domain length does not match the model box length")
    if isinstance(E.domain, Torus) and bc is not BoundaryCondition.PERIODIC:
        raise DomainError(f"torus sets can only be evaluated with the periodic kernel, not {bc.value}")
    if bc is BoundaryCondition.PERIODIC:
        per = perimeter(E if isinstance(E.domain, Torus) else to_torus(E))
    else:
        per = perimeter(E)
    return _breakdown(E.items, per, p, bc)


def completed_square_terms(E: IntervalSet, rho: float) -> tuple[float, float, float]:
    """The exact decomposition of self_interaction + rho * (second moment).

    Returns (square_term, cubic_term, bulk_term) with

        square = rho sum_n q_n (x_n - s_n/(2 rho))^2,   s_n = sum_{m<n} q_m - sum_{m>n} q_m,
        cubic  = (1-rho)^2/(12 rho) sum_n q_n^3,
        bulk   = -(sum_n q_n)^3 / (12 rho),

    whose sum equals self_interaction(E) + rho * int_E x^2.  The square term
    vanishes exactly at the equally-spaced equal-length configurations, which
    is what makes those configurations optimal.
    """
    if not isinstance(E.domain, Segment):
        raise DomainError("completed_square_terms is defined on segment sets")
    if not 0.0 < rho <= 1.0:
        raise ValueError("rho must lie in (0, 1]")
    total = E.mass
    square = 0.0
    cubes = 0.0
    prefix = 0.0
    for x, q in E.items:
        suffix = total - prefix - q
        s = prefix - suffix
        d = x - s / (2.0 * rho)
        square += q * d * d
        cubes += q * q * q
        prefix += q
    square *= rho
    cubic = (1.0 - rho) ** 2 / (12.0 * rho) * cubes
    bulk = -(total ** 3) / (12.0 * rho)
    return square, cubic, bulk


def interaction_with_background(E: IntervalSet, rho: float) -> float:
    """self_interaction(E) + rho * int_E x^2 (the translation-dependent part)."""
    _, _, second, _ = _sums(E.items)
    return _self_interaction(E.items) + rho * second


def pinned_lower_bound(mass: float, n_intervals: int, rho: float) -> float:
    """Sharp lower bound for interaction_with_background over sets of at most
    n_intervals intervals with the given total mass.

    For rho in (0, 1]: -(1/(12 rho)) |E|^3 (1 - (1-rho)^2 / N^2), attained by N
    equally spaced intervals of equal length.  For rho >= 1:
    ((rho - 2)/12) |E|^3, attained by a single interval centered at the origin.
    """
    if rho <= 0:
        raise ValueError("rho must be positive")
    if rho >= 1.0:
        return (rho - 2.0) / 12.0 * mass ** 3
    n = n_intervals
    return -(mass ** 3) / (12.0 * rho) * (1.0 - (1.0 - rho) ** 2 / n ** 2)


def centered_interaction(E: IntervalSet, rho: float) -> float:
    """interaction_with_background minus (rho/|E|)(int_E x dx)^2.

    This combination is exactly translation invariant, which is what makes the
    Dirichlet/periodic ground states translation families.
    """
    mass, first, second, _ = _sums(E.items)
    if mass <= 0:
        raise ValueError("set must have positive mass")
    return _self_interaction(E.items) + rho * second - (rho / mass) * first * first


def cubic_sum_identity_residual(q: list[float]) -> float:
    """LHS - RHS of the cubic rearrangement identity

        sum_n q_n (sum_{m<n} q_m - sum_{m>n} q_m)^2 + (1/3) sum_n q_n^3
            = (1/3) (sum_n q_n)^3,

    which is zero for every list of nonnegative lengths.
    """
    total = sum(q)
    lhs = 0.0
    prefix = 0.0
    for qn in q:
        suffix = total - prefix - qn
        s = prefix - suffix
        lhs += qn * s * s + qn ** 3 / 3.0
        prefix += qn
    return lhs - total ** 3 / 3.0


def complement(E: IntervalSet) -> IntervalSet:
    """The complement (-L/2, L/2) \\ E as a canonical IntervalSet."""
    if not isinstance(E.domain, Segment):
        raise DomainError("complement is defined on segment sets")
    L = E.domain.L
    gaps = []
    cursor = -L / 2.0
    for left, right in E.endpoints():
        if left > cursor:
            gaps.append((cursor, left))
        cursor = right
    if cursor < L / 2.0:
        gaps.append((cursor, L / 2.0))
    return make_interval_set(gaps, E.domain)


def translate(E: IntervalSet, a: float) -> IntervalSet:
    """Translate E by a.  Segment sets must stay inside the box; torus sets wrap."""
    shifted = [(l + a, r + a) for l, r in E.endpoints()]
    if isinstance(E.domain, Torus):
        return make_interval_set(shifted, E.domain)
    return make_interval_set(shifted, E.domain)


def to_torus(E: IntervalSet) -> IntervalSet:
    """Reinterpret a segment set as a subset of the circle of the same length."""
    if isinstance(E.domain, Torus):
        return E
    return make_interval_set(E.endpoints(), Torus(E.domain.L))


def interval_set_to_json(E: IntervalSet) -> dict:
    return {
        "domain": "torus" if isinstance(E.domain, Torus) else "segment",
        "L": E.domain.L,
        "intervals": [[l, r] for l, r in E.endpoints()],
    }


def interval_set_from_json(obj: dict, merge_tol: float | None = None) -> IntervalSet:
    try:
        kind = obj["domain"]
        L = float(obj["L"])
        raw = obj["intervals"]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed interval set object: {exc}") from None
    if kind == "segment":
        domain: Domain = Segment(L)
    elif kind == "torus":
        domain = Torus(L)
    else:
        raise ValueError(f"unknown domain kind {kind!r}")
    pairs = [(float(l), float(r)) for l, r in raw]
    return make_interval_set(pairs, domain, merge_tol=merge_tol)
