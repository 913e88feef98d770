"""Loaders for the bundled reference datasets.

The package ships its comparison data (material properties, simulated
frequency responses, deployment timings, design-parameter tables and the
geometry-optimization reference) as CSV/JSON under ``scissortruss/data``.
Setting the environment variable ``SCISSORTRUSS_DATA`` points the loaders
at an alternative directory with the same file names.
"""

from __future__ import annotations

import csv
import json
import os
from pathlib import Path

from scissortruss.dynamics import FrequencyReference
from scissortruss.materials import MaterialRecord

__all__ = [
    "DATA_ENV_VAR",
    "data_dir",
    "load_materials",
    "load_frequency_references",
    "load_antenna_references",
    "load_deployment_times",
    "load_design_table",
    "load_geometry_reference",
]

DATA_ENV_VAR = "SCISSORTRUSS_DATA"

_BUNDLED = Path(__file__).parent / "data"


def data_dir() -> Path:
    """Active data directory (env override or the bundled copy)."""
    override = os.environ.get(DATA_ENV_VAR)
    return Path(override) if override else _BUNDLED


def _read_rows(filename: str, directory: Path | None = None) -> list[dict[str, str]]:
    path = (directory or data_dir()) / filename
    if not path.exists():
        raise FileNotFoundError(f"reference dataset not found: {path}")
    with open(path, newline="") as fh:
        return list(csv.DictReader(fh))


def _opt_float(text: str) -> float | None:
    text = text.strip()
    return float(text) if text else None


def _material_from_row(row: dict[str, str]) -> MaterialRecord:
    return MaterialRecord(
        name=row["name"],
        youngs_modulus_gpa=float(row["youngs_modulus_gpa"]),
        density_g_cm3=float(row["density_g_cm3"]),
        poissons_ratio=float(row["poissons_ratio"]),
        cte_um_m_c=float(row["cte_um_m_c"]),
        yield_strength_mpa=float(row["yield_strength_mpa"]),
        tensile_strength_mpa=float(row["tensile_strength_mpa"]),
        ultimate_strength_mpa=float(row["ultimate_strength_mpa"]),
        elastic_limit_mpa=float(row["elastic_limit_mpa"]),
        breaking_strength_mpa=float(row["breaking_strength_mpa"]),
        failure_mode=row["failure_mode"],
        max_temperature_c=float(row["max_temperature_c"]),
        min_temperature_c=_opt_float(row.get("min_temperature_c") or ""),
    )


def load_materials(directory: Path | None = None) -> list[MaterialRecord]:
    """Material property database mirroring the reference table."""
    return [_material_from_row(row) for row in _read_rows("materials.csv", directory)]


def load_materials_csv(path: Path) -> list[MaterialRecord]:
    """Materials from an arbitrary CSV with the bundled column layout."""
    if not path.exists():
        raise FileNotFoundError(f"material database not found: {path}")
    with open(path, newline="") as fh:
        return [_material_from_row(row) for row in csv.DictReader(fh)]


def load_frequency_references(directory: Path | None = None) -> list[FrequencyReference]:
    """Aperture-indexed natural/simulated frequency rows.

    Ambiguous source cells are kept verbatim in the ``note`` column
    rather than forced into the numeric fields.
    """
    refs = []
    for row in _read_rows("frequency_response_reference.csv", directory):
        refs.append(
            FrequencyReference(
                aperture_m=_opt_float(row["aperture_m"]),
                natural_hz=_opt_float(row["natural_hz"]),
                sim_with_links_hz=_opt_float(row["sim_with_links_hz"]),
                sim_without_links_hz=_opt_float(row["sim_without_links_hz"]),
                note=row.get("note", "").strip(),
            )
        )
    return refs


def load_antenna_references(directory: Path | None = None) -> list[FrequencyReference]:
    """Cross-design comparison rows (existing antenna concepts)."""
    refs = []
    for row in _read_rows("antenna_frequency_reference.csv", directory):
        refs.append(
            FrequencyReference(
                antenna_name=row["antenna_name"],
                natural_hz=_opt_float(row["natural_hz"]),
            )
        )
    return refs


def load_deployment_times(directory: Path | None = None) -> list[dict]:
    """Deployment timing comparison rows (reference only, never matched)."""
    rows = []
    for row in _read_rows("deployment_time_reference.csv", directory):
        rows.append(
            {
                "antenna_mechanism": row["antenna_mechanism"],
                "aperture_m": float(row["aperture_m"]),
                "units": int(row["units"]),
                "intermediate_s": _opt_float(row["intermediate_s"]),
                "complete_deployed_s": _opt_float(row["complete_deployed_s"]),
                "full_cycle_s": _opt_float(row["full_cycle_s"]),
            }
        )
    return rows


def load_design_table(
    with_links: bool = True, directory: Path | None = None
) -> list[dict[str, float]]:
    """Reference design-parameter table (deployed/stowed envelope rows)."""
    name = "design_table_with_links.csv" if with_links else "design_table_without_links.csv"
    return [
        {key: float(value) for key, value in row.items()}
        for row in _read_rows(name, directory)
    ]


def load_geometry_reference(directory: Path | None = None) -> dict:
    """Reference outcome of the geometry optimization (comparison only)."""
    path = (directory or data_dir()) / "geometry_optimization_reference.json"
    if not path.exists():
        raise FileNotFoundError(f"reference dataset not found: {path}")
    with open(path) as fh:
        return json.load(fh)
