"""Mach-Zehnder interferometer elements acting on the path qubit.

The two arms are the computational basis; a symmetric beam splitter is the
spin rotation exp(-i pi sigma_y / 4) and a relative phase shifter is
exp(-i phi sigma_z / 2). Rotation convention: exp(-i theta n.sigma/2)
rotates the Bloch vector by +theta about n (right-hand rule), so the beam
splitter maps s -> (sz, sy, -sx) and in particular (0,0,1) -> (1,0,0).

Predictability P = |sz| and visibility V = 2r are the which-way and fringe
sharpness measures; V is also operationally recoverable from a phase scan
of the output port populations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .qubit import (
    TWO_PI,
    BlochObservable,
    BlochVector,
    QubitState,
)


@dataclass(frozen=True)
class BeamSplitter:
    """Symmetric 50:50 beam splitter, exp(-i pi sigma_y / 4)."""

    def apply(self, state: QubitState) -> QubitState:
        return apply_beam_splitter(state)


@dataclass(frozen=True)
class PhaseShifter:
    """Relative phase phi between the arms, exp(-i phi sigma_z / 2)."""

    phi: float

    def apply(self, state: QubitState) -> QubitState:
        return apply_phase_shifter(state, self.phi)


MzElement = BeamSplitter | PhaseShifter


def apply_beam_splitter(state: QubitState) -> QubitState:
    """Rotate by +pi/2 about y: (sx, sy, sz) -> (sz, sy, -sx)."""
    s = state.bloch
    return QubitState(BlochVector(s.sz, s.sy, -s.sx))


def apply_phase_shifter(state: QubitState, phi: float) -> QubitState:
    """Rotate by +phi about z: the off-diagonal phase theta advances by phi."""
    s = state.bloch
    c, sn = math.cos(phi), math.sin(phi)
    return QubitState(BlochVector(s.sx * c - s.sy * sn, s.sx * sn + s.sy * c, s.sz))


def apply_elements(state: QubitState, elements: list[MzElement] | tuple[MzElement, ...]) -> QubitState:
    """Apply interferometer elements in order."""
    for el in elements:
        state = el.apply(state)
    return state


def predictability(state: QubitState) -> float:
    """P = |<sigma_z>| = |sz|, the a-priori which-way knowledge."""
    return abs(state.bloch.sz)


def visibility(state: QubitState) -> float:
    """V = 2r = sqrt(sx^2 + sy^2), the analytic fringe visibility."""
    return math.hypot(state.bloch.sx, state.bloch.sy)


def predictability_op() -> BlochObservable:
    """The which-way observable sigma_z."""
    return BlochObservable(0.0, 1.0, (0.0, 0.0, 1.0))


def visibility_op(phi: float) -> BlochObservable:
    """The fringe quadrature cos(phi) sigma_x + sin(phi) sigma_y."""
    return BlochObservable(0.0, 1.0, (math.cos(phi), math.sin(phi), 0.0))


def visibility_perp_op(phi: float) -> BlochObservable:
    """The conjugate quadrature -sin(phi) sigma_x + cos(phi) sigma_y."""
    return BlochObservable(0.0, 1.0, (-math.sin(phi), math.cos(phi), 0.0))


@dataclass(frozen=True)
class FringeScan:
    """Result of a phase scan of the second beam splitter's output port.

    ``v_operational`` = (p_max - p_min)/(p_max + p_min). On an even phase
    grid the sampled p's pair antipodally, so p_max + p_min = 1 up to
    round-off and the ratio converges to the analytic visibility with the
    grid-resolution error O((pi/n)^2).
    """

    p_max: float
    p_min: float
    v_operational: float
    phases: tuple[float, ...]
    p_d1: tuple[float, ...]
    p_d2: tuple[float, ...]


def fringe_scan(state: QubitState, n_phases: int) -> FringeScan:
    """Scan phi over n_phases equispaced points in [0, 2*pi).

    For each phi the state passes a phase shifter then a beam splitter and
    detector D1 clicks with probability w_plus of the output state.
    """
    if n_phases < 8:
        raise ValueError(f"n_phases must be at least 8, got {n_phases}")
    phases = []
    p1s = []
    p2s = []
    for k in range(n_phases):
        phi = TWO_PI * k / n_phases
        out = apply_beam_splitter(apply_phase_shifter(state, phi))
        p1 = out.w_plus
        phases.append(phi)
        p1s.append(p1)
        p2s.append(1.0 - p1)
    p_max = max(p1s)
    p_min = min(p1s)
    return FringeScan(
        p_max=p_max,
        p_min=p_min,
        v_operational=(p_max - p_min) / (p_max + p_min),
        phases=tuple(phases),
        p_d1=tuple(p1s),
        p_d2=tuple(p2s),
    )


@dataclass(frozen=True)
class DualityReport:
    """P, V and theta of a state together with the duality combination P^2 + V^2."""

    predictability: float
    visibility: float
    theta: float
    lhs: float

    @property
    def saturated(self) -> bool:
        return abs(self.lhs - 1.0) <= 1e-9


def duality_report(state: QubitState) -> DualityReport:
    """Evaluate P^2 + V^2 (= ||s||^2, hence <= 1, with equality iff pure)."""
    p = predictability(state)
    v = visibility(state)
    return DualityReport(p, v, state.theta, p * p + v * v)
