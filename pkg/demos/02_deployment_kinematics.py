"""Walkthrough: mobility count and deployment kinematics of one unit.

Counts degrees of freedom with the planar mobility formula, solves the
point positions across the deployment stroke, propagates velocities and
accelerations through the pin-joint chain, and writes SVG plots of the
four deployment curves next to this script.
"""

import math
from pathlib import Path

import numpy as np

from scissortruss import geometry as geo, kinematics as kin, svgplot

OUT = Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

# ---------------------------------------------------------------------------
# Mobility
# ---------------------------------------------------------------------------

for census in (kin.LinkageCount(4, 4, 0), kin.LinkageCount(3, 3, 0)):
    print(f"n={census.n}, jp={census.jp}: M = {kin.gruebler_mobility(census)}")

m, warnings = kin.mobility_report(kin.REFERENCE_LINKAGE_CENSUS, expected_dof=1)
print(f"reference census (18 links, 26 lower pairs): M = {m}")
for w in warnings:
    print(f"  warning: {w}")

# ---------------------------------------------------------------------------
# Positions, velocities, accelerations at one angle
# ---------------------------------------------------------------------------

unit = geo.synthesize_unit(5.09, 80.0, 12.54)
theta = math.radians(46.0)
state = kin.make_state(unit, theta, slider_speed=0.1)
kin.chain_velocities(state)
kin.chain_accelerations(state)

print(f"\nchain state at theta = 46 deg (slider at 0.1 m/s):")
print(f"  theta_dot  = {state.theta_dot:.5f} rad/s")
print(f"  theta_ddot = {state.theta_ddot:.6f} rad/s^2")
print(f"  {'pt':>3} {'x':>8} {'y':>8} {'|v|':>9} {'|a|':>10}")
for label in kin.POINT_LABELS:
    p = state.points[label]
    print(
        f"  {label:>3} {p.position[0]:8.3f} {p.position[1]:8.3f} "
        f"{np.linalg.norm(p.velocity):9.5f} {np.linalg.norm(p.acceleration):10.6f}"
    )

# ---------------------------------------------------------------------------
# Full deployment profile and the four curves
# ---------------------------------------------------------------------------

profile = kin.deployment_profile(unit, slider_speed=0.1, direction="deploy", samples=201)
print(f"\nstroke duration at 0.1 m/s: {profile.total_duration:.2f} s")
print("(the bundled timing table lists 53 s for the full-scale rope drive;")
print(" kept as an external reference row, not a matched quantity)")

curves = kin.kinematic_curves(profile)
for key in kin.CURVE_KEYS:
    path = OUT / f"demo_{key}.svg"
    path.write_text(
        svgplot.line_chart(
            profile.time,
            {key.replace("_", " "): curves[key]},
            title=key.replace("_", " "),
            x_label="time (s)",
        )
    )
    print(f"wrote {path}")

cycle = kin.deployment_profile(unit, 0.1, direction="full-cycle", samples=101)
print(f"full cycle duration: {cycle.total_duration:.2f} s")
