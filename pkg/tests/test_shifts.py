"""Tests for level shifts, spin-flip rates, and amplitude decay."""
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cpslab.materials import (
    Drude,
    PerfectConductor,
    Plasma,
    SuperconductorMB,
    TwoPlateau,
    Vacuum,
)
from cpslab.shifts import (
    ShiftResult,
    Transition,
    TransitionSet,
    excited_shift_pc,
    f_pc,
    ground_shift,
    i_rho,
    regime_tag,
    spin_flip_rate,
    tilde_i,
    ww_amplitude,
)
from cpslab.slabgreen import SlabGeometry
from cpslab.units import CONSTANTS, to_angular_frequency

C = CONSTANTS.c
MU = CONSTANTS.muB * CONSTANTS.g_S
MU0 = CONSTANTS.mu0
HBAR = CONSTANTS.hbar
EV = to_angular_frequency
Z0 = 1e-6


def sapphire() -> TwoPlateau:
    return TwoPlateau(omega_p1=EV(0.16), omega_p2=EV(30.8),
                      omega_1=EV(0.07), omega_2=EV(20.8))


def gold_drude(z: float = Z0) -> Drude:
    scale = C / z
    return Drude(omega_p=scale, nu=(0.035 / 9.0) * scale)


class TestTransitionTypes:
    def test_degenerate_levels_rejected(self):
        with pytest.raises(ValueError):
            Transition(0.0, (1.0, 0.0, 0.0), MU)

    def test_negative_weight_rejected(self):
        with pytest.raises(ValueError):
            Transition(1e9, (1.0, -0.1, 0.0), MU)

    def test_bad_kind_rejected(self):
        with pytest.raises(ValueError):
            Transition(1e9, (1.0, 0.0, 0.0), MU, kind="gravitic")

    def test_empty_set_rejected(self):
        with pytest.raises(ValueError):
            TransitionSet(())

    def test_single_defaults_to_spin_moment(self):
        ts = TransitionSet.single(1e9)
        (tr,) = ts.transitions
        assert tr.moment_scale == pytest.approx(MU)
        assert tr.kind == "magnetic"
        assert tr.w_parallel == pytest.approx(0.5)
        assert tr.w_perp == pytest.approx(0.25)


class TestTildeI:
    @pytest.mark.parametrize("x,ref_par,ref_perp", [
        (0.005, 0.49997603344764134, 0.99368266333857571),
        (1.0, 0.34760319389093608, 0.43806544676157585),
        (20.0, 0.031674434428548317, 0.031752284930956113),
    ])
    def test_frozen_values(self, x, ref_par, ref_perp):
        tp, tq = tilde_i(x)
        assert tp == pytest.approx(ref_par, rel=1e-9)
        assert tq == pytest.approx(ref_perp, rel=1e-9)

    def test_near_limits(self):
        tp, tq = tilde_i(0.005)
        assert tq == pytest.approx(1.0, rel=0.01)
        assert tq == pytest.approx(2.0 * tp, rel=0.01)

    def test_far_limit(self):
        tp, tq = tilde_i(20.0)
        asym = 2.0 / (math.pi * 20.0)
        assert tp == pytest.approx(asym, rel=0.05)
        assert tq == pytest.approx(asym, rel=0.05)

    def test_positive_and_decreasing_beyond_one(self):
        xs = np.logspace(0.0, 2.0, 9)
        vals = [tilde_i(float(x)) for x in xs]
        for (p1, q1), (p2, q2) in zip(vals, vals[1:]):
            assert p1 > p2 > 0.0
            assert q1 > q2 > 0.0

    def test_domain_error(self):
        with pytest.raises(ValueError):
            tilde_i(0.0)


class TestIRho:
    def test_vacuum_zero(self):
        assert i_rho(Z0, C / Z0, Vacuum()) == (0.0, 0.0)

    @pytest.mark.parametrize("x", [0.005, 0.3, 1.0, 20.0])
    def test_mirror_reduces_to_tilde(self, x):
        ip, iq = i_rho(Z0, x * C / Z0, PerfectConductor())
        tp, tq = tilde_i(x)
        s = (2.0 * Z0) ** 3
        assert s * ip == pytest.approx(tp, rel=1e-9)
        assert s * iq == pytest.approx(tq, rel=1e-9)

    def test_gold_frozen_values(self):
        # Reduced plasma frequency 1 and relaxation 0.035/9 at x = 1.
        ip, iq = i_rho(Z0, C / Z0, gold_drude())
        s = (2.0 * Z0) ** 3
        assert s * ip == pytest.approx(0.0525464554933337, rel=1e-9)
        assert s * iq == pytest.approx(0.0473418311106774, rel=1e-9)

    def test_two_plateau_matches_constant_dielectric_reference(self):
        omega_t = 2.0 * math.pi * 560e3
        z = 1e-3 * C / omega_t
        ip, iq = i_rho(z, omega_t, sapphire())
        s = (2.0 * z) ** 3
        assert s * ip == pytest.approx(0.000558707647851, rel=2e-7)
        assert s * iq == pytest.approx(0.000544346362012, rel=2e-7)

    def test_no_hidden_distance_caching(self):
        m = gold_drude()
        a = i_rho(Z0, C / Z0, m)
        b = i_rho(2.0 * Z0, C / Z0, m)
        assert b[0] < a[0] and b[1] < a[1]
        assert i_rho(Z0, C / Z0, m) == a

    def test_electric_coupling_flips_sign_for_mirror(self):
        mag = i_rho(Z0, C / Z0, PerfectConductor())
        ele = i_rho(Z0, C / Z0, PerfectConductor(), coupling="electric")
        assert ele[0] == pytest.approx(-mag[0], rel=1e-10)
        assert ele[1] == pytest.approx(-mag[1], rel=1e-10)

    def test_domain_error(self):
        with pytest.raises(ValueError):
            i_rho(Z0, 0.0, Vacuum())


class TestGroundShift:
    def test_vacuum_exact_zero(self):
        r = ground_shift(Z0, TransitionSet.single(C / Z0), Vacuum())
        assert r.delta_omega == 0.0

    def test_mirror_near_form(self):
        # delta = mu0 m^2 (w_par + 2 w_z) / (64 pi hbar z^3) as x -> 0.
        ts = TransitionSet.single(0.005 * C / Z0)
        r = ground_shift(Z0, ts, PerfectConductor())
        near = MU0 * MU**2 * (0.5 + 2 * 0.25) / (64 * math.pi * HBAR * Z0**3)
        assert r.delta_omega == pytest.approx(near, rel=0.01)
        assert r.regime_tags == ("near",)

    def test_mirror_far_form(self):
        # delta = mu0 m^2 (sum w) / (16 pi^2 hbar z^4 k_t) as x -> inf.
        k_t = 20.0 / Z0
        ts = TransitionSet.single(k_t * C)
        r = ground_shift(Z0, ts, PerfectConductor())
        far = MU0 * MU**2 * 0.75 / (16 * math.pi**2 * HBAR * Z0**4 * k_t)
        assert r.delta_omega == pytest.approx(far, rel=0.05)
        assert r.regime_tags == ("far",)

    @pytest.mark.parametrize("model", [
        PerfectConductor(),
        Plasma(omega_p=EV(9.0)),
        Drude(omega_p=EV(9.0), nu=EV(0.035)),
        sapphire(),
    ])
    def test_magnetic_shift_positive(self, model):
        omega_t = 2.0 * math.pi * 560e3
        for x in (1e-3, 1e-1, 1.0, 1e2):
            z = x * C / omega_t
            r = ground_shift(z, TransitionSet.single(omega_t), model)
            assert r.delta_omega > 0.0

    def test_magnetic_shift_positive_superconductor(self):
        delta = 3.53 * CONSTANTS.kB * 9.2 / 2.0
        omega_sp = EV(2.4)
        sc = SuperconductorMB(
            delta=delta,
            sigma_n=CONSTANTS.eps0 * HBAR * omega_sp**2 / (math.pi * delta))
        omega_t = 2.0 * math.pi * 560e3
        for x in (1e-2, 1.0):
            z = x * C / omega_t
            r = ground_shift(z, TransitionSet.single(omega_t), sc)
            assert r.delta_omega > 0.0

    def test_linear_in_weights(self):
        m = gold_drude()
        omega_t = 0.7 * C / Z0
        w1 = TransitionSet.single(omega_t, weights=(0.3, 0.1, 0.2))
        w2 = TransitionSet.single(omega_t, weights=(0.05, 0.15, 0.1))
        wsum = TransitionSet.single(omega_t, weights=(0.35, 0.25, 0.3))
        a = ground_shift(Z0, w1, m).delta_omega
        b = ground_shift(Z0, w2, m).delta_omega
        s = ground_shift(Z0, wsum, m).delta_omega
        assert s == pytest.approx(a + b, rel=1e-10)

    def test_total_is_sum_of_contributions(self):
        ts = TransitionSet((
            Transition(0.3 * C / Z0, (0.25, 0.25, 0.25), MU),
            Transition(1.7 * C / Z0, (0.1, 0.2, 0.4), 0.5 * MU),
        ))
        r = ground_shift(Z0, ts, gold_drude())
        assert len(r.per_transition) == 2
        assert r.delta_omega == pytest.approx(sum(r.per_transition),
                                              rel=1e-12)

    def test_mirror_distance_scaling_exact(self):
        omega_t = 0.4 * C / Z0
        ts = TransitionSet.single(omega_t)
        for mult in (1.0, 2.0):
            z = mult * Z0
            x = omega_t * z / C
            tp, tq = tilde_i(x)
            closed = (MU0 * MU**2 / (4 * math.pi * HBAR * (2 * z) ** 3)
                      * (0.5 * tp + 0.25 * tq))
            r = ground_shift(z, ts, PerfectConductor())
            assert r.delta_omega == pytest.approx(closed, rel=1e-12)

    def test_electric_mirror_shift_negative(self):
        ts = TransitionSet.single(0.01 * C / Z0, moment_scale=1e-29,
                                  kind="electric")
        r = ground_shift(Z0, ts, PerfectConductor())
        assert r.delta_omega < 0.0

    def test_result_type(self):
        r = ground_shift(Z0, TransitionSet.single(C / Z0), PerfectConductor())
        assert isinstance(r, ShiftResult)


class TestExcitedShiftPC:
    def test_component_identity(self):
        xs = np.logspace(-2, 1.5, 40)
        fp, fq = f_pc(xs)
        resid = fq - 2.0 * fp + 2.0 * (2 * xs) ** 2 * np.cos(2 * xs)
        assert np.max(np.abs(resid)) < 1e-9 * np.max(np.abs(fq))

    @pytest.mark.parametrize("x,fp_ref,fq_ref", [
        (0.005, 0.99985033583662501, 1.9995006816731667),
        (0.5, 0.07722986715078115, -0.92614487743471714),
        (5.0, 26.628369668902482, 221.07104515309545),
        (30.0, 1608.4456792480145, 10074.264817485154),
    ])
    def test_closed_form_frozen(self, x, fp_ref, fq_ref):
        fp, fq = f_pc(x)
        assert fp == pytest.approx(fp_ref, rel=1e-12)
        assert fq == pytest.approx(fq_ref, rel=1e-12)

    def test_matches_ground_shift_in_near_zone(self):
        ts = TransitionSet.single(0.005 * C / Z0)
        exc = excited_shift_pc(Z0, ts).delta_omega
        gnd = ground_shift(Z0, ts, PerfectConductor()).delta_omega
        assert exc == pytest.approx(gnd, rel=0.01)

    def test_oscillatory_far_form(self):
        x = 30.0
        ts = TransitionSet.single(x * C / Z0)
        exc = excited_shift_pc(Z0, ts).delta_omega
        tx = 2.0 * x
        asym_par = -(tx * tx) * (math.cos(tx) + 0.5)
        asym_perp = 2.0 * asym_par - 2.0 * tx * tx * math.cos(tx)
        pref = MU0 * MU**2 / (4 * math.pi * HBAR * (2 * Z0) ** 3)
        ref = pref * (0.5 * asym_par + 0.25 * asym_perp)
        assert exc == pytest.approx(ref, rel=0.05)

    def test_domain_error(self):
        with pytest.raises(ValueError):
            excited_shift_pc(0.0, TransitionSet.single(1e9))


class TestSpinFlipRate:
    def gamma0(self, omega, weights=(0.25, 0.25, 0.25)):
        return (MU0 * MU**2 * sum(weights) * omega**3
                / (3 * math.pi * HBAR * C**3))

    @pytest.mark.parametrize("kz,ref_par,ref_perp", [
        (1.0, 1.35542473888427, 0.346903337530013),
        (0.3, 1.92937629147906, 0.0355402159829392),
    ])
    def test_mirror_frozen_ratios(self, kz, ref_par, ref_perp):
        omega = kz * C / Z0
        par = spin_flip_rate(Z0, omega,
                             TransitionSet.single(omega, weights=(1, 0, 0)),
                             PerfectConductor())
        perp = spin_flip_rate(Z0, omega,
                              TransitionSet.single(omega, weights=(0, 0, 1)),
                              PerfectConductor())
        g0 = self.gamma0(omega, (1, 0, 0))
        assert par / g0 == pytest.approx(ref_par, rel=1e-9)
        assert perp / g0 == pytest.approx(ref_perp, rel=1e-9)

    def test_mirror_closed_forms(self):
        for kz in (0.5, 1.0, 2.0):
            u = 2.0 * kz
            omega = kz * C / Z0
            g0 = self.gamma0(omega, (1, 0, 0))
            par = spin_flip_rate(Z0, omega,
                                 TransitionSet.single(omega, weights=(1, 0, 0)),
                                 PerfectConductor())
            perp = spin_flip_rate(Z0, omega,
                                  TransitionSet.single(omega,
                                                       weights=(0, 0, 1)),
                                  PerfectConductor())
            ref_par = 1.0 + 1.5 * (math.sin(u) / u + math.cos(u) / u**2
                                   - math.sin(u) / u**3)
            ref_perp = 1.0 + 3.0 * (math.cos(u) / u**2 - math.sin(u) / u**3)
            assert par / g0 == pytest.approx(ref_par, rel=1e-8)
            assert perp / g0 == pytest.approx(ref_perp, rel=1e-8)

    def test_vacuum_gives_free_space_rate_exactly(self):
        omega = C / Z0
        ts = TransitionSet.single(omega)
        assert spin_flip_rate(Z0, omega, ts, Vacuum()) == self.gamma0(omega)

    def test_far_distance_approaches_free_space(self):
        # ~600 cancelling oscillation periods: loosen the tolerance rather
        # than ask float64 for 1e-9 relative through that cancellation.
        omega = C / Z0
        z_far = 1e3 * Z0
        ts = TransitionSet.single(omega)
        from cpslab.quadrature import QuadratureSpec
        rate = spin_flip_rate(z_far, omega, ts, PerfectConductor(),
                              quad=QuadratureSpec(rel_tol=1e-7))
        assert rate / self.gamma0(omega) == pytest.approx(1.0, abs=0.01)

    def test_nonnegative_for_lossy_metal(self):
        omega = C / Z0
        m = Drude(omega_p=3.0 * omega, nu=0.1 * omega)
        ts = TransitionSet.single(omega)
        for kz in (0.2, 1.0, 5.0):
            assert spin_flip_rate(kz * Z0, omega, ts, m) >= 0.0

    def test_electric_kind_rejected(self):
        ts = TransitionSet.single(1e9, moment_scale=1e-29, kind="electric")
        with pytest.raises(ValueError):
            spin_flip_rate(Z0, 1e9, ts, Vacuum())


class TestWWAmplitude:
    def test_initial_value(self):
        assert ww_amplitude(0.0, 1e6, 1e9, c0=0.5 + 0.25j) == 0.5 + 0.25j

    def test_pure_phase_when_undamped(self):
        val = ww_amplitude(1e-6, 0.0, 1e9, c0=1.0)
        assert abs(abs(val) - 1.0) < 1e-12

    def test_half_life(self):
        gamma = 1e6
        t_half = 2.0 * math.log(2.0) / gamma
        assert abs(ww_amplitude(t_half, gamma, 0.0)) == pytest.approx(0.5,
                                                                      rel=1e-12)

    def test_array_times(self):
        ts = np.linspace(0.0, 1e-5, 7)
        vals = ww_amplitude(ts, 1e6, 1e9)
        assert vals.shape == (7,)
        assert np.all(np.diff(np.abs(vals)) < 0.0)

    @given(st.floats(min_value=0.0, max_value=1e-3),
           st.floats(min_value=0.0, max_value=1e7),
           st.floats(min_value=-1e10, max_value=1e10))
    @settings(max_examples=50, deadline=None)
    def test_modulus_law(self, t, gamma, dw):
        val = ww_amplitude(t, gamma, dw, c0=0.8)
        assert abs(val) == pytest.approx(0.8 * math.exp(-0.5 * gamma * t),
                                         rel=1e-10)

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            ww_amplitude(-1.0, 1.0, 0.0)
        with pytest.raises(ValueError):
            ww_amplitude(1.0, -1.0, 0.0)


class TestRegimeTag:
    def test_boundaries(self):
        assert regime_tag(1e-3) == "near"
        assert regime_tag(0.5) == "intermediate"
        assert regime_tag(50.0) == "far"
