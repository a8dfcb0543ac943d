"""Variance and maximal-probability uncertainty relations."""

from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given, settings

import matrix_oracle as mo
from conftest import ball_points, phases, sphere_points
from mzduality import (
    MAXIMALLY_MIXED,
    BlochObservable,
    QubitState,
    duality_inequality,
    equivalence_audit,
    hr_relation,
    lp_product_form,
    lp_qubit_form,
    lp_relation,
    max_prob,
    predictability,
    predictability_op,
    probabilities,
    random_mixed_bloch,
    random_pure_bloch,
    sr_pv_form,
    sr_relation,
    visibility,
    visibility_op,
)

INV_SQRT2 = 2.0**-0.5
SIGMA_Z = BlochObservable(0.0, 1.0, (0.0, 0.0, 1.0))
SIGMA_X = BlochObservable(0.0, 1.0, (1.0, 0.0, 0.0))
SUPER = QubitState.from_bloch(INV_SQRT2, 0.0, INV_SQRT2)


def _batch_states(n_pure: int, n_mixed: int, seed: int) -> list[QubitState]:
    rows = np.vstack(
        [random_pure_bloch(n_pure, seed), random_mixed_bloch(n_mixed, seed + 1)]
    )
    return [QubitState.from_bloch(*map(float, s)) for s in rows]


class TestSchrodingerRobertson:
    def test_hand_case(self):
        v = sr_relation(SIGMA_Z, SIGMA_X, SUPER)
        assert v.lhs == pytest.approx(0.25, abs=1e-12)
        assert v.rhs == pytest.approx(0.25, abs=1e-12)
        assert v.holds and v.saturated

    @given(sphere_points(), sphere_points(), sphere_points())
    @settings(max_examples=80)
    def test_every_pure_state_saturates(self, ax_a, ax_b, s):
        obs_a = BlochObservable(0.0, 1.0, ax_a)
        obs_b = BlochObservable(0.0, 1.0, ax_b)
        v = sr_relation(obs_a, obs_b, QubitState.from_bloch(*s))
        assert v.holds
        assert v.saturated

    @given(sphere_points(), sphere_points(), ball_points())
    @settings(max_examples=80)
    def test_holds_on_mixed_states(self, ax_a, ax_b, s):
        obs_a = BlochObservable(0.0, 1.0, ax_a)
        obs_b = BlochObservable(0.0, 1.0, ax_b)
        assert sr_relation(obs_a, obs_b, QubitState.from_bloch(*s)).holds

    @given(sphere_points(), sphere_points(), ball_points())
    @settings(max_examples=60)
    def test_sides_match_matrix_moments(self, ax_a, ax_b, s):
        obs_a = BlochObservable(0.0, 1.0, ax_a)
        obs_b = BlochObservable(0.0, 1.0, ax_b)
        state = QubitState.from_bloch(*s)
        v = sr_relation(obs_a, obs_b, state)
        rho = mo.density_matrix(s)
        op_a = mo.axis_sigma(obs_a.axis)
        op_b = mo.axis_sigma(obs_b.axis)
        want_lhs = mo.variance_matrix(op_a, rho) * mo.variance_matrix(op_b, rho)
        want_rhs = mo.covariance_matrix(op_a, op_b, rho) ** 2 + mo.commutator_term(
            op_a, op_b, rho
        )
        assert v.lhs == pytest.approx(want_lhs, abs=1e-10)
        assert v.rhs == pytest.approx(want_rhs, abs=1e-10)

    def test_strictly_mixed_states_do_not_saturate(self):
        for state in _batch_states(0, 40, seed=9):
            shrunk = QubitState.from_bloch(
                0.97 * state.bloch.sx, 0.97 * state.bloch.sy, 0.97 * state.bloch.sz
            )
            v = sr_relation(SIGMA_Z, SIGMA_X, shrunk)
            assert v.holds and not v.saturated


class TestHeisenbergRobertson:
    @given(sphere_points(), sphere_points(), ball_points())
    @settings(max_examples=80)
    def test_weaker_than_sr(self, ax_a, ax_b, s):
        obs_a = BlochObservable(0.0, 1.0, ax_a)
        obs_b = BlochObservable(0.0, 1.0, ax_b)
        state = QubitState.from_bloch(*s)
        hr = hr_relation(obs_a, obs_b, state)
        sr = sr_relation(obs_a, obs_b, state)
        assert hr.rhs <= sr.rhs + 1e-12
        assert hr.lhs == sr.lhs
        assert hr.holds

    def test_not_saturated_where_covariance_lives(self):
        hr = hr_relation(SIGMA_Z, SIGMA_X, SUPER)
        assert hr.rhs == pytest.approx(0.0, abs=1e-12)
        assert hr.lhs == pytest.approx(0.25, abs=1e-12)
        assert not hr.saturated


class TestSrPvForm:
    @given(ball_points(), phases)
    @settings(max_examples=80)
    def test_matches_general_form(self, s, phi):
        state = QubitState.from_bloch(*s)
        special = sr_pv_form(state, phi)
        general = sr_relation(predictability_op(), visibility_op(phi), state)
        assert special.lhs == pytest.approx(general.lhs, abs=1e-12)
        assert special.rhs == pytest.approx(general.rhs, abs=1e-12)

    @given(ball_points())
    def test_at_fringe_phase_reduces_to_duality_identity(self, s):
        state = QubitState.from_bloch(*s)
        p, v = predictability(state), visibility(state)
        verdict = sr_pv_form(state, state.theta)
        gap_product = (1.0 - p * p) * (1.0 - v * v) - (p * v) ** 2
        gap_duality = 1.0 - (p * p + v * v)
        assert abs(gap_product - gap_duality) < 1e-12
        assert verdict.gap == pytest.approx(gap_duality, abs=1e-12)


class TestLandauPollak:
    def test_max_prob_basics(self):
        assert max_prob(SIGMA_Z, QubitState.from_bloch(0.0, 0.0, 1.0)) == 1.0
        assert max_prob(SIGMA_Z, MAXIMALLY_MIXED) == 0.5
        state = QubitState.from_bloch(0.3, -0.2, 0.6)
        assert max_prob(SIGMA_Z, state) == probabilities(SIGMA_Z, state).max_prob

    def test_eigenstate_saturates_angle_form(self):
        v = lp_relation(SIGMA_Z, SIGMA_X, QubitState.from_bloch(0.0, 0.0, 1.0))
        assert v.lhs == pytest.approx(math.pi / 4.0, abs=1e-12)
        assert v.rhs == pytest.approx(math.pi / 4.0, abs=1e-12)
        assert v.saturated

    def test_unbiased_state_saturates_both_forms(self):
        angle = lp_relation(SIGMA_Z, SIGMA_X, SUPER)
        product = lp_product_form(SIGMA_Z, SIGMA_X, SUPER)
        assert angle.saturated and product.saturated
        assert product.lhs == pytest.approx(INV_SQRT2, abs=1e-12)

    @given(sphere_points(), sphere_points(), ball_points())
    @settings(max_examples=100)
    def test_all_three_forms_hold_everywhere(self, ax_a, ax_b, s):
        obs_a = BlochObservable(0.0, 1.0, ax_a)
        obs_b = BlochObservable(0.0, 1.0, ax_b)
        state = QubitState.from_bloch(*s)
        assert lp_relation(obs_a, obs_b, state).holds
        assert lp_product_form(obs_a, obs_b, state).holds
        assert lp_qubit_form(obs_a, obs_b, state).holds

    def test_forms_agree_on_sampled_states(self):
        for state in _batch_states(60, 60, seed=17):
            angle = lp_relation(SIGMA_Z, SIGMA_X, state)
            product = lp_product_form(SIGMA_Z, SIGMA_X, state)
            doubled = lp_qubit_form(SIGMA_Z, SIGMA_X, state)
            assert angle.holds == product.holds == doubled.holds
            assert angle.saturated == product.saturated == doubled.saturated
            assert doubled.lhs == pytest.approx(2.0 * product.lhs, abs=1e-12)
            assert doubled.rhs == pytest.approx(2.0 * product.rhs, abs=1e-12)

    def test_doubled_bound_is_twice_overlap_not_less(self):
        # an eigenstate of either observable forces the lhs to sqrt(2);
        # a bound of 1 + |a.b| = 1 would be violated there
        v = lp_qubit_form(SIGMA_Z, SIGMA_X, QubitState.from_bloch(0.0, 0.0, 1.0))
        assert v.lhs == pytest.approx(math.sqrt(2.0), abs=1e-12)
        assert v.rhs == pytest.approx(math.sqrt(2.0), abs=1e-12)
        assert v.lhs > 1.0
        assert v.saturated


class TestDualityInequality:
    def test_orientation_and_gap(self):
        v = duality_inequality(QubitState.from_bloch(0.3, 0.0, 0.4))
        assert v.lhs == pytest.approx(0.25, abs=1e-12)
        assert v.rhs == 1.0
        assert v.gap == pytest.approx(0.75, abs=1e-12)
        assert v.holds and not v.saturated

    @given(sphere_points())
    def test_pure_states_saturate(self, s):
        assert duality_inequality(QubitState.from_bloch(*s)).saturated


class TestEquivalenceAudit:
    def test_maximally_mixed(self):
        audit = equivalence_audit(MAXIMALLY_MIXED)
        assert audit.all_hold
        assert not audit.duality.saturated
        assert not audit.sr.saturated
        assert not audit.lp.saturated
        assert audit.all_agree_on_saturation

    def test_pure_batch_saturates_all_three(self):
        for state in _batch_states(120, 0, seed=23):
            audit = equivalence_audit(state)
            assert audit.all_hold
            assert audit.duality.saturated
            assert audit.all_agree_on_saturation

    def test_mixed_batch_agrees_without_saturation(self):
        for state in _batch_states(0, 120, seed=29):
            shrunk = QubitState.from_bloch(
                0.97 * state.bloch.sx, 0.97 * state.bloch.sy, 0.97 * state.bloch.sz
            )
            audit = equivalence_audit(shrunk)
            assert audit.all_hold
            assert not audit.duality.saturated
            assert audit.all_agree_on_saturation

    def test_eps_gap_plumbing(self):
        # a huge tolerance declares everything saturated, in every relation
        audit = equivalence_audit(MAXIMALLY_MIXED, eps_gap=10.0)
        assert audit.duality.saturated and audit.sr.saturated and audit.lp.saturated

    def test_duality_holds_flags(self):
        audit = equivalence_audit(SUPER)
        assert audit.duality_holds and audit.sr_holds and audit.lp_holds
