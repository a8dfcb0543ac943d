"""Preparation uncertainty relations for qubit observables.

Covers the Schrodinger-Robertson (SR) and Heisenberg-Robertson (HR)
variance relations, the Landau-Pollak (LP) relation in its arccos,
product and qubit-specific forms, and an audit showing that on the
same state the wave-particle duality bound, the SR relation at the
fringe-maximizing phase and the LP product form all hold and saturate
together.

All relations are evaluated in normalized form (alpha1 = 0, alpha2 = 1
effectively), since the affine coefficients scale out of every
inequality here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .interferometer import predictability, visibility
from .qubit import BlochObservable, QubitState, _cross, _dot, overlap

EPS_GAP = 1e-9  # |gap| below this counts as saturated
_ACOS_SLACK = 1e-12  # arccos/sqrt arguments may overshoot their domain by this


@dataclass(frozen=True)
class UncertaintyVerdict:
    """Evaluated inequality: both sides, the slack, and the boolean verdicts.

    ``gap`` is oriented so that the relation holds iff gap >= -eps_gap,
    regardless of whether the underlying inequality reads >= or <=.
    """

    lhs: float
    rhs: float
    gap: float
    holds: bool
    saturated: bool


def _verdict_geq(lhs: float, rhs: float, eps_gap: float) -> UncertaintyVerdict:
    gap = lhs - rhs
    return UncertaintyVerdict(lhs, rhs, gap, gap >= -eps_gap, abs(gap) <= eps_gap)


def _verdict_leq(lhs: float, rhs: float, eps_gap: float) -> UncertaintyVerdict:
    gap = rhs - lhs
    return UncertaintyVerdict(lhs, rhs, gap, gap >= -eps_gap, abs(gap) <= eps_gap)


def _clamped_acos(x: float) -> float:
    if x > 1.0 + _ACOS_SLACK or x < -1.0 - _ACOS_SLACK:
        raise ValueError(f"arccos argument {x!r} overshoots [-1, 1] beyond tolerance")
    return math.acos(min(max(x, -1.0), 1.0))


def _safe_sqrt(x: float) -> float:
    if x < -_ACOS_SLACK:
        raise ValueError(f"sqrt argument {x!r} is negative beyond tolerance")
    return math.sqrt(max(x, 0.0))


def sr_relation(
    obs_a: BlochObservable,
    obs_b: BlochObservable,
    state: QubitState,
    eps_gap: float = EPS_GAP,
) -> UncertaintyVerdict:
    """Schrodinger-Robertson in normalized qubit form.

    (1 - (a.s)^2)(1 - (b.s)^2) >= (a.b - (a.s)(b.s))^2 + ((a x b).s)^2.
    The first rhs term is the squared covariance, the second the squared
    commutator expectation; every pure state saturates the relation.
    """
    a, b, s = obs_a.axis, obs_b.axis, state.bloch.as_tuple()
    da, db, ab = _dot(a, s), _dot(b, s), _dot(a, b)
    lhs = (1.0 - da * da) * (1.0 - db * db)
    rhs = (ab - da * db) ** 2 + _dot(_cross(a, b), s) ** 2
    return _verdict_geq(lhs, rhs, eps_gap)


def hr_relation(
    obs_a: BlochObservable,
    obs_b: BlochObservable,
    state: QubitState,
    eps_gap: float = EPS_GAP,
) -> UncertaintyVerdict:
    """Heisenberg-Robertson: SR with the covariance term dropped.

    Weaker than SR and, unlike it, not saturated by generic pure states.
    """
    a, b, s = obs_a.axis, obs_b.axis, state.bloch.as_tuple()
    da, db = _dot(a, s), _dot(b, s)
    lhs = (1.0 - da * da) * (1.0 - db * db)
    rhs = _dot(_cross(a, b), s) ** 2
    return _verdict_geq(lhs, rhs, eps_gap)


def sr_pv_form(state: QubitState, phi: float, eps_gap: float = EPS_GAP) -> UncertaintyVerdict:
    """SR for the which-way and fringe observables, in P, V, theta variables.

    (1 - P^2)(1 - V^2 cos^2(theta - phi)) >=
        P^2 V^2 cos^2(theta - phi) + V^2 sin^2(theta - phi).
    At phi = theta it collapses to (1 - P^2)(1 - V^2) >= (PV)^2, which is
    algebraically the duality bound P^2 + V^2 <= 1.
    """
    p = predictability(state)
    v = visibility(state)
    c = math.cos(state.theta - phi)
    sn = math.sin(state.theta - phi)
    lhs = (1.0 - p * p) * (1.0 - v * v * c * c)
    rhs = p * p * v * v * c * c + v * v * sn * sn
    return _verdict_geq(lhs, rhs, eps_gap)


def max_prob(obs: BlochObservable, state: QubitState) -> float:
    """Largest Born probability M(A) = (1 + |a.s|)/2, in [1/2, 1]."""
    return (1.0 + abs(_dot(obs.axis, state.bloch.as_tuple()))) / 2.0


def lp_relation(
    obs_a: BlochObservable,
    obs_b: BlochObservable,
    state: QubitState,
    eps_gap: float = EPS_GAP,
) -> UncertaintyVerdict:
    """Landau-Pollak relation in angle form.

    arccos(sqrt(M(A))) + arccos(sqrt(M(B))) >= arccos(c), where c is the
    maximal eigenbasis overlap of the two observables.
    """
    lhs = _clamped_acos(_safe_sqrt(max_prob(obs_a, state))) + _clamped_acos(
        _safe_sqrt(max_prob(obs_b, state))
    )
    rhs = _clamped_acos(overlap(obs_a, obs_b))
    return _verdict_geq(lhs, rhs, eps_gap)


def lp_product_form(
    obs_a: BlochObservable,
    obs_b: BlochObservable,
    state: QubitState,
    eps_gap: float = EPS_GAP,
) -> UncertaintyVerdict:
    """LP rearranged free of arccos.

    sqrt(M(A) M(B)) - sqrt((1 - M(A))(1 - M(B))) <= c. Equivalent to the
    angle form via cos(x - y); the two must agree on holds/saturated.
    """
    ma, mb = max_prob(obs_a, state), max_prob(obs_b, state)
    lhs = _safe_sqrt(ma * mb) - _safe_sqrt((1.0 - ma) * (1.0 - mb))
    rhs = overlap(obs_a, obs_b)
    return _verdict_leq(lhs, rhs, eps_gap)


def lp_qubit_form(
    obs_a: BlochObservable,
    obs_b: BlochObservable,
    state: QubitState,
    eps_gap: float = EPS_GAP,
) -> UncertaintyVerdict:
    """LP product form doubled into Bloch dot products.

    sqrt((1 + |a.s|)(1 + |b.s|)) - sqrt((1 - |a.s|)(1 - |b.s|)) <=
        sqrt(2 (1 + |a.b|)) = 2c.
    Note the right-hand side is twice the overlap c, not c^2 rescaled;
    with any smaller constant an eigenstate of either observable already
    violates the bound.
    """
    a, b, s = obs_a.axis, obs_b.axis, state.bloch.as_tuple()
    x, y = abs(_dot(a, s)), abs(_dot(b, s))
    lhs = _safe_sqrt((1.0 + x) * (1.0 + y)) - _safe_sqrt((1.0 - x) * (1.0 - y))
    rhs = 2.0 * overlap(obs_a, obs_b)
    return _verdict_leq(lhs, rhs, eps_gap)


def duality_inequality(state: QubitState, eps_gap: float = EPS_GAP) -> UncertaintyVerdict:
    """P^2 + V^2 <= 1, saturated exactly by pure states."""
    p = predictability(state)
    v = visibility(state)
    return _verdict_leq(p * p + v * v, 1.0, eps_gap)


@dataclass(frozen=True)
class EquivalenceAudit:
    """Joint evaluation of the duality, SR and LP bounds on one state.

    SR is taken at phi = theta (the fringe-maximizing phase) and LP in the
    product form for the which-way and fringe observables at that phase;
    the three are then algebraically equivalent, so they must agree both
    on holding and on saturation.
    """

    duality: UncertaintyVerdict
    sr: UncertaintyVerdict
    lp: UncertaintyVerdict

    @property
    def duality_holds(self) -> bool:
        return self.duality.holds

    @property
    def sr_holds(self) -> bool:
        return self.sr.holds

    @property
    def lp_holds(self) -> bool:
        return self.lp.holds

    @property
    def all_hold(self) -> bool:
        return self.duality.holds and self.sr.holds and self.lp.holds

    @property
    def all_agree_on_saturation(self) -> bool:
        return self.duality.saturated == self.sr.saturated == self.lp.saturated


def equivalence_audit(state: QubitState, eps_gap: float = EPS_GAP) -> EquivalenceAudit:
    """Evaluate the three equivalent bounds at phi = theta(state)."""
    from .interferometer import predictability_op, visibility_op

    phi = state.theta
    return EquivalenceAudit(
        duality=duality_inequality(state, eps_gap),
        sr=sr_pv_form(state, phi, eps_gap),
        lp=lp_product_form(predictability_op(), visibility_op(phi), state, eps_gap),
    )
