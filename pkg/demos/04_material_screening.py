"""Walkthrough: screening structural materials for low-orbit service.

Filters the bundled property table on thermal survivability, normalizes
the mechanical features, trains the advisory max-margin classifier and
ranks the survivors by the strength/stiffness/density score.
"""

from scissortruss import materials as mat, refdata

db = refdata.load_materials()
print(f"database: {len(db)} materials")
for m in db:
    print(
        f"  {m.name:<15} E = {m.youngs_modulus_gpa:5.0f} GPa  "
        f"rho = {m.density_g_cm3:4.2f} g/cm3  sigma_t = {m.tensile_strength_mpa:5.0f} MPa  "
        f"T_max = {m.max_temperature_c:4.0f} C"
    )

# ---------------------------------------------------------------------------
# Thermal window
# ---------------------------------------------------------------------------

subset, flags = mat.thermal_filter(db, t_max_req_c=150.0, t_min_req_c=-100.0)
print(f"\nthermal window [-100 C, +150 C]: {len(subset)} of {len(db)} survive")
for name, note in sorted(flags.items()):
    print(f"  {name:<15} {note}")

# ---------------------------------------------------------------------------
# Features, classifier, scores
# ---------------------------------------------------------------------------

norm_full = mat.normalize_features(db)
labels = [m.name in {s.name for s in subset} for m in db]
clf = mat.train_classifier(norm_full.matrix, labels)
print(
    f"\nadvisory classifier: training accuracy {clf.training_accuracy:.2f}, "
    f"margin {clf.margin:.4f} (reported, never gating)"
)

result = mat.select_material(db)
print("\nscore ranking over the suitable subset (tensile + modulus - density):")
for s in result.ranking:
    contributions = ", ".join(f"{k} {v:+.3f}" for k, v in s.contributions.items())
    print(f"  {s.name:<15} score {s.score:+.4f}  ({contributions})")

print(f"\nselected material: {result.winner.name}")
print(
    "a carbon-fiber laminate wins on specific strength and stiffness while "
    "clearing the thermal window"
)
