import math

import numpy as np
import pytest

from scissortruss import dynamics as dyn
from scissortruss import refdata

PAPER_PARAMS = dyn.DynamicParams()  # k=1, m=1, R0=12.5, L=6.47, 12 units


def zero_crossing_period(traj):
    """Oscillation period from linearly interpolated zero crossings."""
    theta = traj.theta - np.mean(traj.theta)
    t = traj.time
    crossings = []
    for i in range(len(theta) - 1):
        if theta[i] == 0.0 or theta[i] * theta[i + 1] < 0.0:
            frac = theta[i] / (theta[i] - theta[i + 1])
            crossings.append(t[i] + frac * (t[i + 1] - t[i]))
        if len(crossings) >= 3:
            break
    assert len(crossings) >= 3, "trajectory too short for a period estimate"
    # same-direction crossings span exactly one period, immune to offsets
    return crossings[2] - crossings[0]


class TestEnergyComponents:
    def test_rest_state_is_zero(self):
        e = dyn.energy_components(dyn.OscillationState(0.0, 0.0), PAPER_PARAMS)
        assert e == (0.0, 0.0, 0.0)

    def test_elastic_energy_hand_value(self):
        # 6 k R0^2 theta^2 = 6 * 156.25 * 0.01 = 9.375 J
        p = dyn.DynamicParams(mass=1.0, stiffness=1.0, ring_radius=12.5, unit_length=6.47)
        e = dyn.energy_components(dyn.OscillationState(theta=0.1, theta_dot=0.0), p)
        assert e.elastic == pytest.approx(9.375, rel=1e-12)

    def test_kinetic_energy_hand_value(self):
        # 6 m (R0^2 + L^2) = 6 * (156.25 + 41.8609) = 1188.67 J at unit rate
        p = dyn.DynamicParams(mass=1.0, stiffness=1.0, ring_radius=12.5, unit_length=6.47)
        e = dyn.energy_components(dyn.OscillationState(theta=0.0, theta_dot=1.0), p)
        assert e.kinetic == pytest.approx(1188.67, abs=0.01)

    def test_unit_count_scales_prefactors(self):
        p12 = dyn.DynamicParams(unit_count=12)
        p24 = dyn.DynamicParams(unit_count=24)
        s = dyn.OscillationState(theta=0.05, theta_dot=0.3)
        e12 = dyn.energy_components(s, p12)
        e24 = dyn.energy_components(s, p24)
        assert e24.kinetic == pytest.approx(2.0 * e12.kinetic, rel=1e-12)
        assert e24.elastic == pytest.approx(2.0 * e12.elastic, rel=1e-12)
        assert e24.gravitational == pytest.approx(2.0 * e12.gravitational, rel=1e-12)


class TestNaturalFrequency:
    def test_reference_values(self):
        nf = dyn.natural_frequency(PAPER_PARAMS)
        assert nf.omega_n == pytest.approx(0.888, abs=1e-3)
        assert nf.f_n == pytest.approx(0.1414, abs=2e-4)
        assert not nf.degenerate

    def test_zero_unit_length_limit(self):
        p = dyn.DynamicParams(mass=2.0, stiffness=8.0, ring_radius=3.0, unit_length=0.0)
        nf = dyn.natural_frequency(p)
        assert nf.omega_n == pytest.approx(math.sqrt(8.0 / 2.0), rel=1e-12)

    def test_scale_invariance(self):
        base = dyn.natural_frequency(PAPER_PARAMS).omega_n
        for c in (0.1, 2.0, 40.0):
            p = dyn.DynamicParams(ring_radius=12.5 * c, unit_length=6.47 * c)
            assert dyn.natural_frequency(p).omega_n == pytest.approx(base, rel=1e-12)

    def test_monotonic_in_stiffness_and_mass(self):
        w = dyn.natural_frequency(dyn.DynamicParams(stiffness=1.0)).omega_n
        w2k = dyn.natural_frequency(dyn.DynamicParams(stiffness=2.0)).omega_n
        w2m = dyn.natural_frequency(dyn.DynamicParams(mass=2.0)).omega_n
        assert w2k > w
        assert w2m < w

    def test_zero_stiffness_degenerate(self):
        nf = dyn.natural_frequency(dyn.DynamicParams(stiffness=0.0))
        assert nf == (0.0, 0.0, True)


class TestSimulateOscillation:
    def test_matches_closed_form_without_gravity(self):
        p = dyn.DynamicParams(gravity=0.0)
        nf = dyn.natural_frequency(p)
        period = 2.0 * math.pi / nf.omega_n
        traj = dyn.simulate_oscillation(p, dyn.OscillationState(0.1), dt=1e-3, t_end=3 * period)
        exact = 0.1 * np.cos(nf.omega_n * traj.time)
        assert np.max(np.abs(traj.theta - exact)) < 1e-6

    def test_zero_crossing_period(self):
        p = dyn.DynamicParams(gravity=0.0)
        traj = dyn.simulate_oscillation(p, dyn.OscillationState(0.1), dt=1e-3, t_end=30.0)
        assert zero_crossing_period(traj) == pytest.approx(7.076, abs=2e-3)

    def test_mean_settles_to_equilibrium(self):
        nf = dyn.natural_frequency(PAPER_PARAMS)
        period = 2.0 * math.pi / nf.omega_n
        traj = dyn.simulate_oscillation(
            PAPER_PARAMS, dyn.OscillationState(0.1), dt=1e-3, t_end=100 * period
        )
        eq = dyn.equilibrium_angle(PAPER_PARAMS)
        assert eq == pytest.approx(-1.0 * 9.81 * 6.47 / 156.25, rel=1e-12)
        assert np.mean(traj.theta) == pytest.approx(eq, abs=1e-4)

    def test_equilibrium_start_stays_constant(self):
        eq = dyn.equilibrium_angle(PAPER_PARAMS)
        traj = dyn.simulate_oscillation(
            PAPER_PARAMS, dyn.OscillationState(eq, 0.0), dt=1e-3, t_end=5.0
        )
        assert np.max(np.abs(traj.theta - eq)) < 1e-12

    def test_energy_conservation_hundred_periods(self):
        nf = dyn.natural_frequency(PAPER_PARAMS)
        period = 2.0 * math.pi / nf.omega_n
        traj = dyn.simulate_oscillation(
            PAPER_PARAMS, dyn.OscillationState(0.1), dt=1e-3, t_end=100 * period
        )
        energy = traj.energies()
        drift = np.max(np.abs(energy - energy[0])) / abs(energy[0])
        assert drift < 1e-6

    def test_fft_peak_matches_natural_frequency(self):
        p = dyn.DynamicParams(gravity=0.0)
        nf = dyn.natural_frequency(p)
        period = 2.0 * math.pi / nf.omega_n
        traj = dyn.simulate_oscillation(p, dyn.OscillationState(0.1), dt=1e-2, t_end=200 * period)
        bin_width = 1.0 / (traj.time[-1] - traj.time[0])
        assert abs(dyn.dominant_frequency(traj) - nf.f_n) <= bin_width

    def test_eom_residual_on_trajectory(self):
        # finite-difference residual of the equation of motion stays tiny
        dt = 1e-3
        traj = dyn.simulate_oscillation(
            PAPER_PARAMS, dyn.OscillationState(0.1), dt=dt, t_end=20.0
        )
        nf = dyn.natural_frequency(PAPER_PARAMS)
        th = traj.theta
        forcing = PAPER_PARAMS.gravity * PAPER_PARAMS.unit_length / PAPER_PARAMS.inertia_term
        residual = (
            (th[2:] - 2.0 * th[1:-1] + th[:-2]) / dt**2
            + nf.omega_n**2 * th[1:-1]
            + forcing
        )
        assert np.max(np.abs(residual)) < 1e-4

    def test_bad_steps(self):
        with pytest.raises(ValueError):
            dyn.simulate_oscillation(PAPER_PARAMS, dyn.OscillationState(0.1), dt=0.0)
        with pytest.raises(ValueError):
            dyn.simulate_oscillation(PAPER_PARAMS, dyn.OscillationState(0.1), dt=1.0, t_end=0.5)

    def test_nonfinite_state_rejected(self):
        with pytest.raises(ValueError):
            dyn.OscillationState(math.nan)


class TestCompareReferences:
    def test_25m_row(self):
        refs = refdata.load_frequency_references()
        rows = dyn.compare_references(PAPER_PARAMS, refs, use_links=True)
        row25 = next(r for r in rows if r.reference.aperture_m == 25.0 and r.simulated_hz)
        assert row25.analytic_hz == pytest.approx(0.1414, abs=2e-4)
        assert row25.simulated_hz == 0.1182
        assert row25.relative_difference == pytest.approx(0.196, abs=2e-3)
        assert not row25.flagged

    def test_cross_design_rows_are_comparison_only(self):
        rows = dyn.compare_references(PAPER_PARAMS, refdata.load_antenna_references())
        astro = next(r for r in rows if r.label == "AstroMesh")
        assert astro.analytic_hz is None
        assert astro.relative_difference is None
        assert astro.reference.natural_hz == 0.012

    def test_empty_reference_set(self):
        assert dyn.compare_references(PAPER_PARAMS, []) == []

    def test_flagging_threshold(self):
        refs = refdata.load_frequency_references()
        rows = dyn.compare_references(PAPER_PARAMS, refs, use_links=False)
        row6 = next(
            r for r in rows if r.reference.aperture_m == 6.0 and r.simulated_hz
        )
        # analytic 0.1414 vs simulated 0.3541 differs by 60%: flagged
        assert row6.relative_difference > 0.5
        assert row6.flagged

    def test_missing_reference_file(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            refdata.load_frequency_references(tmp_path)


class TestTrajectoryCsv:
    def test_header_and_rows(self):
        traj = dyn.simulate_oscillation(
            PAPER_PARAMS, dyn.OscillationState(0.1), dt=0.5, t_end=2.0
        )
        text = dyn.trajectory_csv(traj)
        lines = text.strip().split("\n")
        assert lines[0] == "t_s,theta_rad,theta_dot"
        assert len(lines) == 1 + len(traj.time)
        assert float(lines[1].split(",")[1]) == pytest.approx(0.1, rel=1e-6)
