"""Walkthrough: sizing one scissor unit and the full deployable ring.

Starts from a 25 m aperture split into 12 modular units, derives every
link length of the triple-scissor unit from the deployed height and
scissor angle, and tabulates the deployed/stowed envelope with its
storage ratios across a family of apertures.
"""

from scissortruss import geometry as geo

# ---------------------------------------------------------------------------
# One modular unit
# ---------------------------------------------------------------------------

aperture = 25.0
units = 12

chord = geo.stretched_length(aperture, units)
print(f"ring chord for a {aperture:g} m aperture split {units} ways: {chord:.3f} m")

unit = geo.synthesize_unit(5.09, deployed_angle_deg=80.0, stowed_angle_deg=12.54)
print("\nlink lengths of the modular unit (m):")
for i, L in enumerate(unit.lengths, start=1):
    print(f"  L{i:<3d} {L:7.3f}")

# the cosine-law chord of one scissor pair recovers the deployed height
span = geo.scissor_span(unit.l7, 80.0)
print(f"\nscissor span at 80 deg: {span:.3f} m (deployed height {unit.deployed_height} m)")
print(f"halving chain: L7 = L1/2 = {unit.l7:.4f}, L11 = L1/4 = {unit.l11:.4f}")

# ---------------------------------------------------------------------------
# Ring designs and their stowage
# ---------------------------------------------------------------------------

design = geo.antenna_design(aperture, units)
print(f"\nring closure residual: {geo.ring_closure_residual(design):.2e} m")

print("\ndeployed/stowed envelope, with links:")
rows = geo.table_row_set([6.0, 13.0, 15.0, 25.0, 28.0, 30.0], units, with_links=True)
print(geo.metrics_csv(rows))

print("same family without the horizontal links (more compact stow):")
rows_free = geo.table_row_set([6.0, 25.0, 30.0], units, with_links=False)
for r in rows_free:
    print(
        f"  D = {r.aperture_m:4.0f} m  stowed height {r.stowed_height:6.3f} m  "
        f"sr_height {r.sr_height:.3f}  sr_volume {r.sr_volume:.1f}"
    )

print("\nstorage ratios are invariant under aperture scaling:")
for aperture_i in (6.0, 25.0, 30.0):
    m = geo.design_metrics(aperture_i, units, True)
    print(
        f"  D = {aperture_i:4.0f} m -> sr_diameter {m.sr_diameter:.3f}, "
        f"sr_height {m.sr_height:.3f}, sr_volume {m.sr_volume:.1f}"
    )

m18 = geo.design_metrics(25.0, 18, True)
print(
    f"\n18-unit variant (extrapolated stow coefficients, flag = "
    f"{m18.extrapolated}): stretched {m18.stretched_length:.3f} m, "
    f"sr_diameter {m18.sr_diameter:.1f}"
)
