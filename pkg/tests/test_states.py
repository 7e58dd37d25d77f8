"""Tests for parent and hole-burnt state construction."""

from __future__ import annotations

import math

import numpy as np
import pytest
from conftest import ENGINEERED_KINDS, grid_specs, spec_id, state_specs
from hypothesis import given

from holeburn.exceptions import (
    FiltrationUndefinedError,
    InvalidParameterError,
    NormalizationRegressionError,
)
from holeburn.fock_core import apply_annihilation
from holeburn.helpers import normalization as norm
from holeburn.helpers.normalization import (
    amplitude_norm_sq,
    audit_normalization,
    check_printed_normalization,
    printed_norm_sq,
)
from holeburn.models import Engineering, Family, FockVector, StateKind, StateSpec
from holeburn.states import (
    build_engineered,
    build_parent,
    build_state,
    coherent_state,
    fock_state,
    photon_add,
    photon_number_summary,
    vacuum_filter,
)


def fidelity(a: FockVector, b: FockVector) -> float:
    size = max(a.cutoff, b.cutoff) + 1
    x = a.padded(size - a.cutoff - 1).amplitudes
    y = b.padded(size - b.cutoff - 1).amplitudes
    return abs(np.vdot(x, y)) ** 2


class TestStateSpec:
    def test_kind_round_trip(self):
        for kind in StateKind:
            spec = StateSpec.from_kind(kind)
            assert spec.kind is kind
            assert spec.parent().kind.family is kind.family

    @pytest.mark.parametrize(
        "params",
        [
            {"family": "ecs", "alpha_mag": -1.0},
            {"family": "bs", "p": 1.5},
            {"family": "bs", "m": -1},
            {"family": "bs", "m": 2.5},
            {"family": "ks", "chi": math.nan},
            {"family": "xx"},
        ],
    )
    def test_invalid_parameters(self, params):
        with pytest.raises(InvalidParameterError):
            StateSpec(**params)

    def test_with_param_checks_family(self):
        spec = StateSpec(Family.ECS, alpha_mag=1.0)
        assert spec.with_param("alpha_mag", 2.0).alpha_mag == 2.0
        with pytest.raises(InvalidParameterError):
            spec.with_param("p", 0.3)
        with pytest.raises(InvalidParameterError):
            StateSpec(Family.BS).with_param("m", 3.5)

    def test_complex_alpha(self):
        spec = StateSpec(Family.KS, alpha_mag=2.0, theta=math.pi / 2)
        assert spec.alpha == pytest.approx(2.0j)
        assert spec.intensity == 4.0


class TestParents:
    def test_kerr_without_nonlinearity_is_coherent(self):
        alpha = 1.3 * complex(math.cos(0.4), math.sin(0.4))
        v = build_parent(StateSpec(Family.KS, alpha_mag=abs(alpha), theta=0.4))
        n = np.arange(v.cutoff + 1)
        expected = np.array(
            [math.exp(-abs(alpha) ** 2 / 2) * alpha**k / math.sqrt(math.factorial(k)) for k in n]
        )
        np.testing.assert_allclose(v.amplitudes, expected, atol=1e-11)

    def test_kerr_phase_sign(self):
        v = build_parent(StateSpec(Family.KS, alpha_mag=1.0, chi=0.1))
        ratio = v.amplitudes[3] / abs(v.amplitudes[3])
        assert ratio == pytest.approx(np.exp(-1j * 0.1 * 6))

    def test_binomial_at_unit_probability(self):
        v = build_parent(StateSpec(Family.BS, p=1.0, m=5))
        np.testing.assert_allclose(v.probabilities, [0, 0, 0, 0, 0, 1], atol=1e-15)

    def test_binomial_at_zero_photons(self):
        v = build_parent(StateSpec(Family.BS, p=0.4, m=0))
        assert v.cutoff == 0
        assert v.probabilities[0] == pytest.approx(1.0)

    def test_even_coherent_distribution(self):
        v = build_parent(StateSpec(Family.ECS, alpha_mag=1.0))
        assert v.probabilities[1] == 0.0
        assert v.probabilities[0] == pytest.approx(1.0 / math.cosh(1.0), rel=1e-10)

    def test_rejects_engineered_spec(self):
        with pytest.raises(InvalidParameterError):
            build_parent(StateSpec(Family.ECS, Engineering.PA, alpha_mag=1.0))


class TestHoleBurning:
    def test_filter_superposition(self):
        v = FockVector(np.array([1.0, 1.0]) / math.sqrt(2.0))
        np.testing.assert_allclose(vacuum_filter(v).amplitudes, [0.0, 1.0])

    def test_filter_fixed_point(self):
        v = fock_state(1)
        np.testing.assert_array_equal(vacuum_filter(v).amplitudes, v.amplitudes)

    def test_filter_vacuum_undefined(self):
        with pytest.raises(FiltrationUndefinedError):
            vacuum_filter(fock_state(0))

    def test_add_to_vacuum(self):
        np.testing.assert_allclose(photon_add(fock_state(0)).amplitudes, [0.0, 1.0])

    def test_add_to_binomial_vacuum(self):
        v = build_state(StateSpec(Family.BS, Engineering.PA, p=0.6, m=0))
        np.testing.assert_allclose(v.probabilities, [0.0, 1.0], atol=1e-15)
        assert printed_norm_sq(StateSpec(Family.BS, Engineering.PA, p=0.6, m=0)) == 1.0

    @given(state_specs())
    def test_filter_is_idempotent(self, spec):
        once = vacuum_filter(build_parent(spec.parent()))
        twice = vacuum_filter(once)
        np.testing.assert_allclose(twice.amplitudes, once.amplitudes, rtol=0, atol=1e-15)

    @given(state_specs([StateKind.BS, StateKind.KS, StateKind.ECS]))
    def test_add_then_lower_recovers_parent(self, spec):
        parent = build_parent(spec)
        lowered = apply_annihilation(photon_add(parent))
        n = np.arange(lowered.cutoff + 1)
        recovered = FockVector(lowered.amplitudes / (n + 1)).normalized()
        assert fidelity(recovered, parent) > 1 - 1e-10

    def test_filtered_near_vacuum_rejected(self):
        with pytest.raises(FiltrationUndefinedError):
            build_state(StateSpec(Family.KS, Engineering.VF, alpha_mag=1e-7))

    @pytest.mark.parametrize(
        "spec",
        [
            *(StateSpec(Family.KS, Engineering.VF, alpha_mag=a) for a in (1e-2, 1e-3, 1e-4)),
            *(StateSpec(Family.ECS, Engineering.VF, alpha_mag=a) for a in (1e-2, 3e-3)),
            *(StateSpec(Family.BS, Engineering.VF, p=p, m=10) for p in (1e-6, 1e-9)),
        ],
        ids=spec_id,
    )
    def test_filtered_near_vacuum_parent_stays_normalized(self, spec):
        v = build_state(spec)
        assert v.probabilities[0] == 0.0
        assert abs(v.norm_sq - 1.0) < 1e-12
        v.require_normalized()

    def test_filtered_binomial_vacuum_rejected(self):
        with pytest.raises(FiltrationUndefinedError):
            build_state(StateSpec(Family.BS, Engineering.VF, p=0.0, m=10))


@pytest.mark.parametrize("spec", grid_specs(), ids=spec_id)
def test_states_are_normalized(spec):
    v = build_state(spec)
    assert abs(v.norm_sq - 1.0) < 1e-12
    assert v.tail_bound < 1e-12


@pytest.mark.parametrize("spec", grid_specs(ENGINEERED_KINDS), ids=spec_id)
def test_hole_at_vacuum(spec):
    assert build_state(spec).probabilities[0] < 1e-24


@given(state_specs(ENGINEERED_KINDS))
def test_hole_at_vacuum_randomized(spec):
    assert build_state(spec).probabilities[0] < 1e-24


@given(state_specs([StateKind.ECS, StateKind.VFECS, StateKind.PAECS]))
def test_even_family_parity(spec):
    probs = build_state(spec).probabilities
    odd_support = spec.engineering is Engineering.PA
    assert np.all(probs[0 if odd_support else 1 :: 2] == 0.0)


@pytest.mark.parametrize("kind", [StateKind.BS, StateKind.VFBS, StateKind.PABS])
def test_binomial_finite_support(kind):
    spec = StateSpec.from_kind(kind, p=0.3, m=10)
    v = build_state(spec)
    top = 11 if kind is StateKind.PABS else 10
    assert v.cutoff == top
    assert v.tail_bound == 0.0
    start = 0 if kind is StateKind.BS else 1
    assert np.all(v.probabilities[start:] > 0.0)


class TestNormalization:
    @pytest.mark.parametrize(
        "spec",
        [
            s
            for s in grid_specs()
            if s.kind is not StateKind.VFECS and s.kind.engineering is not Engineering.NONE
        ],
        ids=spec_id,
    )
    def test_closed_forms_match_amplitudes(self, spec):
        audit = audit_normalization(spec)
        assert audit.relative_deviation < 1e-10
        assert check_printed_normalization(spec) == audit

    @pytest.mark.parametrize("alpha", [0.3, 1.0, 2.0])
    def test_filtered_even_coherent_constant_is_inconsistent(self, alpha):
        spec = StateSpec(Family.ECS, Engineering.VF, alpha_mag=alpha)
        audit = check_printed_normalization(spec)
        assert not audit.consistent
        x = alpha * alpha
        assert audit.amplitude_derived == pytest.approx(
            1.0 / (4.0 * (math.cosh(x) - 1.0)), rel=1e-12
        )
        assert audit.printed == pytest.approx(1.0 / (4.0 * math.cosh(x) - 1.0))

    def test_filtered_even_coherent_uses_amplitudes(self):
        spec = StateSpec(Family.ECS, Engineering.VF, alpha_mag=1.0)
        v = build_engineered(spec)
        parent = build_parent(spec.parent())
        ratio = v.probabilities[2] / parent.probabilities[2]
        assert ratio == pytest.approx(1.0 / (1.0 - 1.0 / math.cosh(1.0)), rel=1e-10)

    def test_filtered_binomial_small_probability(self):
        spec = StateSpec(Family.BS, Engineering.VF, p=1e-9, m=10)
        assert printed_norm_sq(spec) == pytest.approx(1.0 / (1.0 - (1.0 - 1e-9) ** 10), rel=1e-6)
        assert audit_normalization(spec).consistent

    def test_regression_raises_on_mismatch(self, monkeypatch):
        spec = StateSpec(Family.KS, Engineering.PA, alpha_mag=1.0)
        monkeypatch.setattr(norm, "printed_norm_sq", lambda s: 2.0 * amplitude_norm_sq(s))
        with pytest.raises(NormalizationRegressionError):
            norm.check_printed_normalization(spec)


class TestPhotonStatistics:
    def test_coherent(self):
        stats = photon_number_summary(coherent_state(1.5))
        assert stats.mean == pytest.approx(2.25, rel=1e-10)
        assert stats.mandel_q == pytest.approx(0.0, abs=1e-9)

    def test_fock(self):
        stats = photon_number_summary(fock_state(3))
        assert stats.variance == 0.0
        assert stats.mandel_q == -1.0

    def test_vacuum_has_no_q(self):
        assert photon_number_summary(fock_state(0)).mandel_q is None
