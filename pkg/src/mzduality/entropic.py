"""Renyi entropy sums for the which-way / fringe observable pair.

For a pure state with predictability P and visibility V the constraint
P^2 + V^2 = 1 parametrizes as (P, V) = (cos a, sin a), a in [0, pi/2].
Minimizing H_q(P) + H_q(V) over that arc exposes three regimes split by
a critical Renyi index q*:

  I   (q < q*):  the minimum ln 2 sits at the boundary points (V, P) in
                 {(0, 1), (1, 0)} - full which-way knowledge or full fringes;
  II  (q = q*):  boundary and balanced minimizers coexist (triple set);
  III (q > q*):  the unique minimizer is the balanced point
                 (1/sqrt 2, 1/sqrt 2).

q* solves 2 H_q(1/sqrt 2) = ln 2 and is found by bracketed root finding.
The restriction to pure states when minimizing over all physical states is
justified by concavity of H_q in the state for q <= 2, so the constrained
minimizers lie on the sphere; the q <= 2 precondition below encodes that.

Entropies use natural logarithms throughout.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from .qubit import BlochObservable, BlochVector, ProbPair, QubitState, probabilities

LN2 = math.log(2.0)
SHANNON_WINDOW = 1e-7  # |q - 1| below this evaluates the Shannon limit
BAND_EPS = 1e-6  # half-width of the regime-II band around q*
Q_STAR_BRACKET = (1.01, 2.0)

_HALF_PI = math.pi / 2.0
_INV_SQRT2 = 1.0 / math.sqrt(2.0)
_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0
_INVPHI2 = (3.0 - math.sqrt(5.0)) / 2.0


def _check_q(q: float) -> None:
    if math.isnan(q) or q <= 0.0:
        raise ValueError(f"Renyi index q must be positive, got {q!r}")


def _check_q_minimization(q: float) -> None:
    _check_q(q)
    if q > 2.0:
        raise ValueError(
            f"q = {q!r} outside (0, 2]: the reduction of the constrained "
            "minimum to pure states relies on concavity of H_q in the "
            "state, which holds only for q <= 2"
        )


def _two_outcome_entropy(p_hi: float, p_lo: float, q: float) -> float:
    # core evaluator; assumes a valid normalized pair and q > 0 or q = inf
    if q == math.inf:
        h = -math.log(max(p_hi, p_lo))
    elif abs(q - 1.0) < SHANNON_WINDOW:
        h = 0.0
        for p in (p_hi, p_lo):
            if p > 0.0:
                h -= p * math.log(p)
    else:
        h = math.log(p_hi**q + p_lo**q) / (1.0 - q)
    # mathematically h lies in [0, ln 2]; clamp round-off (and kill -0.0)
    return max(0.0, min(h, LN2)) + 0.0


def _bias_entropy(x: float, q: float) -> float:
    """Entropy of the pair {(1+x)/2, (1-x)/2} for bias x in [0, 1]."""
    return _two_outcome_entropy((1.0 + x) / 2.0, (1.0 - x) / 2.0, q)


def _bias_entropy_vec(x: np.ndarray, q: float) -> np.ndarray:
    # vectorized mirror of _bias_entropy, same branch structure
    p = (1.0 + x) / 2.0
    m = (1.0 - x) / 2.0
    if q == math.inf:
        h = -np.log(np.maximum(p, m))
    elif abs(q - 1.0) < SHANNON_WINDOW:
        h = -(p * np.log(p))  # p >= 1/2, always positive
        h = h - np.where(m > 0.0, m * np.log(np.where(m > 0.0, m, 1.0)), 0.0)
    else:
        h = np.log(p**q + m**q) / (1.0 - q)
    return np.clip(h, 0.0, LN2) + 0.0


def renyi_entropy(probs: ProbPair, q: float) -> float:
    """Renyi entropy H_q = ln(p+^q + p-^q)/(1-q) of a two-outcome distribution.

    q = 1 (within a 1e-7 window) evaluates the Shannon limit -sum p ln p
    with the 0 ln 0 = 0 convention; q = math.inf gives the min-entropy
    -ln(max p). Rejects q <= 0. Values lie in [0, ln 2], monotonically
    nonincreasing in q.
    """
    _check_q(q)
    return _two_outcome_entropy(probs.p_plus, probs.p_minus, q)


def entropy_of_observable(obs: BlochObservable, state: QubitState, q: float) -> float:
    """H_q of the Born distribution of obs in state."""
    return renyi_entropy(probabilities(obs, state), q)


def entropy_sum(p_val: float, v_val: float, q: float) -> float:
    """H_q(P) + H_q(V) for biases P, V in [0, 1] (not restricted to the disk)."""
    _check_q(q)
    for name, val in (("P", p_val), ("V", v_val)):
        if not 0.0 <= val <= 1.0:
            raise ValueError(f"{name} must lie in [0, 1], got {val!r}")
    return _bias_entropy(p_val, q) + _bias_entropy(v_val, q)


def _golden_section(f, lo: float, hi: float, tol: float) -> tuple[float, float]:
    # classic golden-section minimization; returns (x, f(x)) at the midpoint
    a, b = lo, hi
    h = b - a
    c = a + _INVPHI2 * h
    d = a + _INVPHI * h
    fc, fd = f(c), f(d)
    while h > tol:
        if fc < fd:
            b, d, fd = d, c, fc
            h = b - a
            c = a + _INVPHI2 * h
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            h = b - a
            d = a + _INVPHI * h
            fd = f(d)
    x = (a + b) / 2.0
    return x, f(x)


@dataclass(frozen=True)
class MinimizationResult:
    """Constrained minimum of H_q(P) + H_q(V) on the arc P^2 + V^2 = 1.

    ``minimizers`` lists (V, P) pairs, in increasing arc angle, of every
    local minimum whose value lies within ``value_tol`` of the optimum;
    points closer than ``distinct_tol`` in angle are merged. ``regime`` is
    "I", "II" or "III" according to whether the minimizer set contains
    boundary points, both boundary and balanced points, or neither
    boundary point.
    """

    q: float
    min_value: float
    minimizers: tuple[tuple[float, float], ...]
    regime: str
    grid_size: int
    refine_tol: float


def minimize_entropy_sum(
    q: float,
    *,
    grid_size: int = 10_000,
    refine_tol: float = 1e-12,
    value_tol: float = 1e-9,
    distinct_tol: float = 1e-6,
) -> MinimizationResult:
    """Minimize H_q(P) + H_q(V) subject to P^2 + V^2 = 1, P, V >= 0.

    Parametrizes (P, V) = (cos a, sin a) on a in [0, pi/2], scans a coarse
    grid for local minima, refines each bracket by golden-section search to
    ``refine_tol`` in a, and pins a refined point back to its bracket
    endpoint whenever the endpoint evaluates lower (so the exact boundary
    minimizers are reported exactly). Requires 0 < q <= 2; see module
    docstring for why larger q is refused.
    """
    _check_q_minimization(q)
    if grid_size < 64:
        raise ValueError(f"grid_size must be at least 64, got {grid_size}")

    alphas = np.linspace(0.0, _HALF_PI, grid_size)
    vals = _bias_entropy_vec(np.cos(alphas), q) + _bias_entropy_vec(np.sin(alphas), q)

    cand_idx = [0] if vals[0] <= vals[1] else []
    interior = np.nonzero((vals[1:-1] <= vals[:-2]) & (vals[1:-1] <= vals[2:]))[0] + 1
    cand_idx.extend(int(i) for i in interior)
    if vals[-1] <= vals[-2]:
        cand_idx.append(grid_size - 1)

    def f(a: float) -> float:
        return _bias_entropy(math.cos(a), q) + _bias_entropy(math.sin(a), q)

    refined: list[tuple[float, float]] = []
    for i in cand_idx:
        lo = alphas[max(i - 1, 0)]
        hi = alphas[min(i + 1, grid_size - 1)]
        x, fx = _golden_section(f, lo, hi, refine_tol)
        for endpoint in (lo, hi):
            fe = f(endpoint)
            if fe < fx:
                x, fx = endpoint, fe
        refined.append((float(x), fx))

    # merge near-duplicates, keeping the better value
    refined.sort()
    merged: list[tuple[float, float]] = []
    for x, fx in refined:
        if merged and x - merged[-1][0] <= distinct_tol:
            if fx < merged[-1][1]:
                merged[-1] = (x, fx)
        else:
            merged.append((x, fx))

    min_value = min(fx for _, fx in merged)
    winners = [(x, fx) for x, fx in merged if fx <= min_value + value_tol]

    minimizers = []
    has_boundary = False
    has_center = False
    for x, _ in winners:
        if x <= distinct_tol:
            minimizers.append((0.0, 1.0))
            has_boundary = True
        elif x >= _HALF_PI - distinct_tol:
            minimizers.append((1.0, 0.0))
            has_boundary = True
        else:
            minimizers.append((math.sin(x), math.cos(x)))
            if abs(x - math.pi / 4.0) <= distinct_tol:
                has_center = True

    if has_boundary and has_center:
        regime = "II"
    elif has_boundary:
        regime = "I"
    else:
        regime = "III"

    return MinimizationResult(
        q=q,
        min_value=float(min_value),
        minimizers=tuple(minimizers),
        regime=regime,
        grid_size=grid_size,
        refine_tol=refine_tol,
    )


@functools.lru_cache(maxsize=None)
def find_q_star(tolerance: float = 1e-10) -> float:
    """Solve 2 H_q(1/sqrt 2) = ln 2 for the critical index q*.

    Brackets the root in [1.01, 2] (the objective is +0.1398 at the left
    end and -0.1178 at the right), verifies the sign change, then runs
    Brent's method with xtol = tolerance. The residual of the defining
    equation at the returned root is of order 0.4 * tolerance or smaller.
    """
    if not 1e-14 <= tolerance <= 1e-3:
        raise ValueError(f"tolerance must lie in [1e-14, 1e-3], got {tolerance!r}")

    def g(q: float) -> float:
        return 2.0 * _bias_entropy(_INV_SQRT2, q) - LN2

    lo, hi = Q_STAR_BRACKET
    glo, ghi = g(lo), g(hi)
    if not glo > 0.0 > ghi:
        raise RuntimeError(
            f"no sign change across [{lo}, {hi}]: g({lo}) = {glo!r}, "
            f"g({hi}) = {ghi!r}; the entropy evaluator is broken"
        )
    return float(brentq(g, lo, hi, xtol=tolerance))


def classify_regime(q: float, band_eps: float = BAND_EPS) -> str:
    """Regime label from the position of q relative to q*.

    Returns "II" inside the band |q - q*| <= band_eps, else "I" below and
    "III" above. Independent of minimize_entropy_sum's structural
    classification; the two must agree away from the band.
    """
    _check_q_minimization(q)
    q_star = find_q_star(1e-12)
    if abs(q - q_star) <= band_eps:
        return "II"
    return "I" if q < q_star else "III"


def brute_force_min(
    q: float, n_states: int, include_mixed: bool, *, seed: int = 0
) -> float:
    """Reference minimum of the entropy sum over physical states.

    The pure-state part sweeps the quarter circle (P, V) = (cos a, sin a)
    on a dense equispaced grid with both endpoints included, so the
    boundary minimizers are evaluated exactly; resolution error elsewhere
    is O((pi / 2 / n_states)^2). With include_mixed, a seeded uniform
    sample of the open Bloch ball is swept as well (it can only confirm,
    never undercut, the pure minimum, because entropies grow toward the
    center of the ball).
    """
    _check_q_minimization(q)
    if n_states < 10_000:
        raise ValueError(f"n_states must be at least 10000, got {n_states}")
    psi = np.linspace(0.0, _HALF_PI, n_states)
    vals = _bias_entropy_vec(np.cos(psi), q) + _bias_entropy_vec(np.sin(psi), q)
    best = float(vals.min())
    if include_mixed:
        s = random_mixed_bloch(n_states, seed)
        p = np.abs(s[:, 2])
        v = np.hypot(s[:, 0], s[:, 1])
        mixed_vals = _bias_entropy_vec(p, q) + _bias_entropy_vec(v, q)
        best = min(best, float(mixed_vals.min()))
    return best


@dataclass(frozen=True, eq=False)
class ContourGrid:
    """Entropy-sum samples on the full unit square of (V, P) pairs.

    ``values[i, j]`` holds H_q(V = axis[i]) + H_q(P = axis[j]); the matrix
    is exactly symmetric. The square deliberately extends beyond the
    physical disk P^2 + V^2 <= 1 so level sets can be drawn against the
    constraint arc, recorded in ``constraint``.
    """

    q: float
    n: int
    axis: np.ndarray
    values: np.ndarray
    constraint: str = "P^2+V^2=1"

    def nearest_value(self, v: float, p: float) -> float:
        """Value at the grid node nearest to (v, p)."""
        for name, val in (("v", v), ("p", p)):
            if not 0.0 <= val <= 1.0:
                raise ValueError(f"{name} must lie in [0, 1], got {val!r}")
        i = int(round(v * (self.n - 1)))
        j = int(round(p * (self.n - 1)))
        return float(self.values[i, j])


def contour_grid(q: float, n: int) -> ContourGrid:
    """Tabulate H_q(P) + H_q(V) on an n x n equispaced grid over [0, 1]^2."""
    _check_q(q)
    if q == math.inf:
        raise ValueError("contour grids require a finite Renyi index")
    if n < 32:
        raise ValueError(f"n must be at least 32, got {n}")
    axis = np.linspace(0.0, 1.0, n)
    h = _bias_entropy_vec(axis, q)
    values = h[:, None] + h[None, :]
    return ContourGrid(q=q, n=n, axis=axis, values=values)


def unbiased_saturating_states(theta: float = 0.0) -> list[BlochVector]:
    """The four pure states with P = V = 1/sqrt(2) at off-diagonal phase theta.

    These are +/-(cos(theta)/sqrt 2, sin(theta)/sqrt 2, +/-1/sqrt 2); they
    saturate the duality bound at the balanced point and are the regime-III
    minimizers of the entropy sum.
    """
    cx = math.cos(theta) * _INV_SQRT2
    cy = math.sin(theta) * _INV_SQRT2
    return [
        BlochVector(cx, cy, _INV_SQRT2),
        BlochVector(cx, cy, -_INV_SQRT2),
        BlochVector(-cx, -cy, _INV_SQRT2),
        BlochVector(-cx, -cy, -_INV_SQRT2),
    ]


@dataclass(frozen=True)
class RegionMinimum:
    """Minimum of the entropy sum over a sampled region of the Bloch ball."""

    min_value: float
    argmin: BlochVector
    n_accepted: int


def constrained_min_over_region(
    q: float,
    region,
    n_samples: int,
    *,
    seed: int = 0,
) -> RegionMinimum:
    """Minimize H_q(P) + H_q(V) over states accepted by a region predicate.

    ``region`` is a callable BlochVector -> bool. Candidates mix a
    deterministic great-circle sweep in the x-z plane (hitting the cardinal
    states exactly), a seeded uniform sample of the sphere, and a seeded
    uniform sample of the ball, roughly n_samples in total. Raises if the
    predicate rejects every candidate.
    """
    _check_q_minimization(q)
    if n_samples < 12:
        raise ValueError(f"n_samples must be at least 12, got {n_samples}")

    base = n_samples // 3
    sweep_n = max(4, base - base % 4)  # multiple of 4 puts poles/equator on the grid
    sphere_n = base
    ball_n = max(n_samples - sweep_n - sphere_n, 1)

    psi = np.linspace(0.0, 2.0 * math.pi, sweep_n, endpoint=False)
    sweep = np.column_stack([np.sin(psi), np.zeros(sweep_n), np.cos(psi)])
    candidates = np.vstack(
        [sweep, random_pure_bloch(sphere_n, seed), random_mixed_bloch(ball_n, seed + 1)]
    )

    best_val = math.inf
    best: BlochVector | None = None
    n_accepted = 0
    for x, y, z in candidates:
        bv = BlochVector(float(x), float(y), float(z))
        if not region(bv):
            continue
        n_accepted += 1
        val = _bias_entropy(abs(bv.sz), q) + _bias_entropy(math.hypot(bv.sx, bv.sy), q)
        if val < best_val:
            best_val = val
            best = bv
    if best is None:
        raise ValueError("region predicate rejected every sampled state")
    return RegionMinimum(min_value=best_val, argmin=best, n_accepted=n_accepted)


def random_pure_bloch(n: int, seed: int) -> np.ndarray:
    """n uniform points on the unit sphere: Gaussian draws, normalized."""
    rng = np.random.default_rng(seed)
    v = rng.normal(size=(n, 3))
    norms = np.linalg.norm(v, axis=1)
    while np.any(norms < 1e-12):  # essentially impossible, but stay total
        bad = norms < 1e-12
        v[bad] = rng.normal(size=(int(bad.sum()), 3))
        norms = np.linalg.norm(v, axis=1)
    return v / norms[:, None]


def random_mixed_bloch(n: int, seed: int) -> np.ndarray:
    """n uniform points in the closed unit ball, by rejection from the cube."""
    rng = np.random.default_rng(seed)
    rows = [np.empty((0, 3))]
    have = 0
    while have < n:
        batch = rng.uniform(-1.0, 1.0, size=(max(n - have, 64) * 2, 3))
        keep = batch[(batch * batch).sum(axis=1) <= 1.0]
        rows.append(keep)
        have += len(keep)
    return np.vstack(rows)[:n]
