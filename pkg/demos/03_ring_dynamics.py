"""Walkthrough: energy-method dynamics of the deployed 12-unit ring.

Evaluates the kinetic/elastic/gravitational energy closed forms, the
undamped natural frequency, a velocity-Verlet oscillation run with its
energy drift, and the comparison against the bundled simulation
frequency responses.
"""

import math

import numpy as np

from scissortruss import dynamics as dyn, refdata

params = dyn.DynamicParams()  # k = 1 N/m, m = 1 kg, R0 = 12.5 m, L = 6.47 m
print(f"ring parameters: {params}")

state = dyn.OscillationState(theta=0.1, theta_dot=0.0)
T, Ve, Vg = dyn.energy_components(state, params)
print(f"\nenergies at theta = 0.1 rad: T = {T:.3f} J, Ve = {Ve:.3f} J, Vg = {Vg:.3f} J")

nf = dyn.natural_frequency(params)
print(f"natural frequency: omega_n = {nf.omega_n:.3f} rad/s, f_n = {nf.f_n:.4f} Hz")
print(f"oscillation period: {2 * math.pi / nf.omega_n:.3f} s")

# ---------------------------------------------------------------------------
# Time integration
# ---------------------------------------------------------------------------

period = 2.0 * math.pi / nf.omega_n
traj = dyn.simulate_oscillation(params, state, dt=1e-3, t_end=100.0 * period)
energy = traj.energies()
drift = np.max(np.abs(energy - energy[0])) / abs(energy[0])
print(f"\nvelocity-Verlet over 100 periods: energy drift {drift:.2e} relative")
print(f"mean angle {np.mean(traj.theta):+.5f} rad vs static offset "
      f"{dyn.equilibrium_angle(params):+.5f} rad (gravity term)")

no_gravity = dyn.DynamicParams(gravity=0.0)
traj0 = dyn.simulate_oscillation(no_gravity, state, dt=1e-2, t_end=200.0 * period)
print(f"dominant spectral line (g = 0): {dyn.dominant_frequency(traj0):.5f} Hz")

# ---------------------------------------------------------------------------
# Reference comparisons
# ---------------------------------------------------------------------------

print("\nanalytic model vs bundled simulation responses (with links):")
for row in dyn.compare_references(params, refdata.load_frequency_references()):
    if row.relative_difference is None:
        note = f" note: {row.reference.note}" if row.reference.note else ""
        print(f"  {row.label:>6}: comparison-only row{note}")
    else:
        flag = "  <- flagged" if row.flagged else ""
        print(
            f"  {row.label:>6}: analytic {row.analytic_hz:.4f} Hz vs simulated "
            f"{row.simulated_hz:.4f} Hz ({100 * row.relative_difference:.1f}%){flag}"
        )

print("\nexisting antenna concepts (natural frequency, Hz):")
for ref in refdata.load_antenna_references():
    print(f"  {ref.antenna_name:<45} {ref.natural_hz}")
