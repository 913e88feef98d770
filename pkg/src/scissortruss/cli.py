"""Command-line surface: design, analyze, material and optimize runs.

Every subcommand reads a JSON config, writes its artifacts under the
output directory and prints a short summary.  Runs are deterministic for
a fixed (config, seed) pair: artifacts carry no timestamps and all
random draws derive from the seed.

Exit codes: 0 success, 2 config error, 3 domain infeasibility,
4 I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from scissortruss import dynamics, geometry, kinematics, materials, optimize, refdata, svgplot

__all__ = ["main", "ReportBundle", "cmd_design", "cmd_analyze", "cmd_material", "cmd_optimize"]

DEFAULT_SEED = 1234

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_INFEASIBLE = 3
EXIT_IO = 4


class ConfigError(Exception):
    """Malformed or incomplete run configuration."""


class InfeasibleError(Exception):
    """Domain-level infeasibility (empty candidate set, empty window...)."""


@dataclass
class ReportBundle:
    """Artifacts written by one subcommand plus its summary text."""

    artifacts: list[Path] = field(default_factory=list)
    summary: str = ""
    warnings: list[str] = field(default_factory=list)


# ---------------------------------------------------------------------------
# small helpers
# ---------------------------------------------------------------------------


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return [_jsonable(v) for v in obj.tolist()]
    if isinstance(obj, (np.floating,)):
        return float(obj)
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, Path):
        return str(obj)
    return obj


def _write_json(path: Path, payload) -> None:
    path.write_text(json.dumps(_jsonable(payload), indent=2, sort_keys=True) + "\n")


def _write_text(path: Path, text: str) -> None:
    path.write_text(text)


def _require(config: dict, key: str, kind, what: str = ""):
    if key not in config:
        raise ConfigError(f"missing required config key {key!r}{what}")
    value = config[key]
    if kind is float and isinstance(value, (int, float)) and not isinstance(value, bool):
        return float(value)
    if not isinstance(value, kind) or isinstance(value, bool) and kind is not bool:
        raise ConfigError(f"config key {key!r} must be of type {kind.__name__}")
    return value


def _design_from_config(config: dict) -> geometry.AntennaDesign:
    aperture = _require(config, "aperture_m", float)
    unit_count = int(config.get("unit_count", 12))
    with_links = bool(config.get("with_links", True))
    deployed = float(config.get("deployed_angle_deg", geometry.DEPLOYED_ANGLE_DEG))
    stowed = float(config.get("stowed_angle_deg", geometry.STOWED_ANGLE_DEG))
    return geometry.antenna_design(aperture, unit_count, with_links, deployed, stowed)


# ---------------------------------------------------------------------------
# design
# ---------------------------------------------------------------------------


def cmd_design(config: dict, out_dir: Path, seed: int = DEFAULT_SEED) -> ReportBundle:
    """Unit link-length table plus design metrics for the requested apertures."""
    if "apertures_m" in config:
        apertures = config["apertures_m"]
        if not isinstance(apertures, list) or not apertures:
            raise ConfigError("config key 'apertures_m' must be a non-empty list")
        apertures = [float(a) for a in apertures]
        reference_aperture = apertures[-1]
    else:
        reference_aperture = _require(
            config, "aperture_m", float, " (or a list under 'apertures_m')"
        )
        apertures = [reference_aperture]
    unit_count = int(config.get("unit_count", 12))
    with_links = bool(config.get("with_links", True))
    deployed = float(config.get("deployed_angle_deg", geometry.DEPLOYED_ANGLE_DEG))
    stowed = float(config.get("stowed_angle_deg", geometry.STOWED_ANGLE_DEG))

    design = geometry.antenna_design(
        reference_aperture, unit_count, with_links, deployed, stowed
    )
    rows = geometry.table_row_set(apertures, unit_count, with_links)

    bundle = ReportBundle()
    out_dir.mkdir(parents=True, exist_ok=True)

    links_path = out_dir / "unit_links.csv"
    link_lines = ["link,length_m"]
    link_lines += [
        f"L{i + 1},{L:.6g}" for i, L in enumerate(design.unit.lengths)
    ]
    _write_text(links_path, "\n".join(link_lines) + "\n")
    bundle.artifacts.append(links_path)

    metrics_path = out_dir / "design_metrics.csv"
    _write_text(metrics_path, geometry.metrics_csv(rows))
    bundle.artifacts.append(metrics_path)

    summary_path = out_dir / "design_summary.json"
    payload = {
        "aperture_m": reference_aperture,
        "unit_count": unit_count,
        "with_links": with_links,
        "unit_height_baselines_m": {
            "link_synthesis": geometry.SYNTHESIS_UNIT_HEIGHT_M,
            "metrics_tables": geometry.METRICS_DEPLOYED_HEIGHT_M,
        },
        "unit": {
            "lengths_m": list(design.unit.lengths),
            "deployed_height_m": design.unit.deployed_height,
            "stretched_length_m": design.unit.stretched_length,
            "deployed_angle_deg": design.unit.deployed_angle_deg,
            "stowed_angle_deg": design.unit.stowed_angle_deg,
        },
        "metrics": [
            {
                "aperture_m": r.aperture_m,
                "stretched_length_m": r.stretched_length,
                "deployed_height_m": r.deployed_height,
                "stowed_height_m": r.stowed_height,
                "deployed_diameter_m": r.deployed_diameter,
                "stowed_diameter_m": r.stowed_diameter,
                "deployed_volume_m3": r.deployed_volume,
                "stowed_volume_m3": r.stowed_volume,
                "sr_diameter": r.sr_diameter,
                "sr_height": r.sr_height,
                "sr_volume": r.sr_volume,
                "extrapolated": r.extrapolated,
            }
            for r in rows
        ],
    }
    _write_json(summary_path, payload)
    bundle.artifacts.append(summary_path)

    if unit_count != 12:
        bundle.warnings.append(
            f"stow coefficients extrapolated from the 12-unit baseline to "
            f"{unit_count} units"
        )
    bundle.warnings.append(
        "two deployed-height baselines are in circulation (5.09 m for link "
        "synthesis, 5.122 m in the metrics tables); both are reported"
    )
    bundle.summary = (
        f"design: {len(rows)} aperture row(s), {unit_count} units, "
        f"{'with' if with_links else 'without'} links; "
        f"sr_volume = {rows[-1].sr_volume:.3f}"
    )
    return bundle


# ---------------------------------------------------------------------------
# analyze
# ---------------------------------------------------------------------------


def cmd_analyze(config: dict, out_dir: Path, seed: int = DEFAULT_SEED) -> ReportBundle:
    """Mobility, deployment profile, natural frequency and reference rows."""
    design = _design_from_config(config)
    slider_speed = float(config.get("slider_speed_m_s", 0.1))
    samples = int(config.get("profile_samples", 201))
    direction = config.get("profile_direction", "deploy")
    stiffness = float(config.get("stiffness_n_m", 1.0))
    unit_mass = float(config.get("unit_mass_kg", 1.0))
    gravity = float(config.get("gravity_m_s2", 9.81))

    linkage_cfg = config.get("linkage", {})
    census = kinematics.LinkageCount(
        n=int(linkage_cfg.get("links", kinematics.REFERENCE_LINKAGE_CENSUS.n)),
        jp=int(linkage_cfg.get("lower_pairs", kinematics.REFERENCE_LINKAGE_CENSUS.jp)),
        jh=int(linkage_cfg.get("higher_pairs", kinematics.REFERENCE_LINKAGE_CENSUS.jh)),
    )
    mobility, mobility_warnings = kinematics.mobility_report(census, expected_dof=1)

    profile = kinematics.deployment_profile(
        design.unit, slider_speed=slider_speed, direction=direction, samples=samples
    )

    params = dynamics.DynamicParams(
        mass=unit_mass,
        stiffness=stiffness,
        ring_radius=design.ring_radius,
        unit_length=design.unit.stretched_length,
        gravity=gravity,
        unit_count=design.unit_count,
    )
    freq = dynamics.natural_frequency(params)
    comparisons = dynamics.compare_references(
        params, refdata.load_frequency_references(), use_links=design.with_links
    )
    antenna_rows = refdata.load_antenna_references()
    timing_rows = refdata.load_deployment_times()

    bundle = ReportBundle(warnings=list(mobility_warnings))
    out_dir.mkdir(parents=True, exist_ok=True)

    profile_path = out_dir / "deployment_profile.csv"
    _write_text(profile_path, kinematics.profile_csv(profile))
    bundle.artifacts.append(profile_path)

    curves = kinematics.kinematic_curves(profile)
    curve_labels = {
        "linear_velocity": ("Linear velocity", "m/s"),
        "angular_velocity": ("Angular velocity", "rad/s"),
        "linear_acceleration": ("Linear acceleration", "m/s^2"),
        "angular_acceleration": ("Angular acceleration", "rad/s^2"),
    }
    for key in kinematics.CURVE_KEYS:
        title, unit_label = curve_labels[key]
        svg_path = out_dir / f"{key}.svg"
        _write_text(
            svg_path,
            svgplot.line_chart(
                profile.time,
                {title: curves[key]},
                title=title,
                x_label="time (s)",
                y_label=unit_label,
            ),
        )
        bundle.artifacts.append(svg_path)

    oscillation = None
    if "oscillation" in config:
        osc_cfg = config["oscillation"]
        trajectory = dynamics.simulate_oscillation(
            params,
            dynamics.OscillationState(
                theta=float(osc_cfg.get("theta0_rad", 0.1)),
                theta_dot=float(osc_cfg.get("theta_dot0_rad_s", 0.0)),
            ),
            dt=float(osc_cfg.get("dt_s", 1e-3)),
            t_end=float(osc_cfg.get("t_end_s", 30.0)),
        )
        traj_path = out_dir / "oscillation_trajectory.csv"
        _write_text(traj_path, dynamics.trajectory_csv(trajectory))
        bundle.artifacts.append(traj_path)
        energies = trajectory.energies()
        oscillation = {
            "theta0_rad": trajectory.theta[0],
            "dt_s": float(osc_cfg.get("dt_s", 1e-3)),
            "t_end_s": float(osc_cfg.get("t_end_s", 30.0)),
            "dominant_frequency_hz": dynamics.dominant_frequency(trajectory),
            "energy_drift_rel": float(
                np.max(np.abs(energies - energies[0])) / abs(energies[0])
            ),
        }

    report_path = out_dir / "analysis_report.json"
    payload = {
        "design": {
            "aperture_m": design.aperture_m,
            "unit_count": design.unit_count,
            "with_links": design.with_links,
        },
        "mobility": {
            "links": census.n,
            "lower_pairs": census.jp,
            "higher_pairs": census.jh,
            "formula_value": mobility,
            "expected_dof": 1,
            "warnings": mobility_warnings,
        },
        "natural_frequency": {
            "omega_n_rad_s": freq.omega_n,
            "f_n_hz": freq.f_n,
            "degenerate": freq.degenerate,
            "parameters": {
                "mass_kg": params.mass,
                "stiffness_n_m": params.stiffness,
                "ring_radius_m": params.ring_radius,
                "unit_length_m": params.unit_length,
                "unit_count": params.unit_count,
            },
        },
        "deployment": {
            "slider_speed_m_s": slider_speed,
            "direction": direction,
            "stroke_duration_s": kinematics.deployment_duration(design.unit, slider_speed),
            "profile_duration_s": profile.total_duration,
            "samples": samples,
            "reference_timings": timing_rows,
        },
        "frequency_comparisons": [
            {
                "label": c.label,
                "analytic_hz": c.analytic_hz,
                "simulated_hz": c.simulated_hz,
                "relative_difference": c.relative_difference,
                "flagged": c.flagged,
                "note": c.reference.note,
            }
            for c in comparisons
        ],
        "existing_antenna_frequencies": [
            {"antenna": r.antenna_name, "natural_hz": r.natural_hz} for r in antenna_rows
        ],
        "oscillation": oscillation,
    }
    _write_json(report_path, payload)
    bundle.artifacts.append(report_path)

    bundle.summary = (
        f"analyze: mobility formula value {mobility}, "
        f"f_n = {freq.f_n:.4f} Hz, stroke {payload['deployment']['stroke_duration_s']:.1f} s"
    )
    return bundle


# ---------------------------------------------------------------------------
# material
# ---------------------------------------------------------------------------


def cmd_material(config: dict, out_dir: Path, seed: int = DEFAULT_SEED) -> ReportBundle:
    """Thermal filter, advisory classifier and score ranking."""
    t_max = float(config.get("t_max_req_c", materials.DEFAULT_MAX_TEMP_REQUIREMENT_C))
    t_min = float(config.get("t_min_req_c", materials.DEFAULT_MIN_TEMP_REQUIREMENT_C))
    weights = config.get("weights", [1.0, 1.0, 1.0])
    if not (isinstance(weights, list) and len(weights) == 3):
        raise ConfigError("config key 'weights' must be a list of 3 numbers")
    weights = tuple(float(w) for w in weights)

    if "database_csv" in config:
        db = refdata.load_materials_csv(Path(config["database_csv"]))
    else:
        db = refdata.load_materials()

    try:
        result = materials.select_material(db, t_max, t_min, weights)
    except LookupError as exc:
        raise InfeasibleError(str(exc)) from exc

    bundle = ReportBundle()
    out_dir.mkdir(parents=True, exist_ok=True)

    scores_path = out_dir / "material_scores.csv"
    lines = ["name,score,tensile_contribution,modulus_contribution,density_contribution"]
    for s in result.ranking:
        lines.append(
            f"{s.name},{s.score:.6g},{s.contributions['tensile_strength']:.6g},"
            f"{s.contributions['youngs_modulus']:.6g},{s.contributions['density']:.6g}"
        )
    _write_text(scores_path, "\n".join(lines) + "\n")
    bundle.artifacts.append(scores_path)

    report_path = out_dir / "material_selection.json"
    payload = {
        "winner": result.winner.name,
        "winner_properties": {
            "youngs_modulus_gpa": result.winner.youngs_modulus_gpa,
            "density_g_cm3": result.winner.density_g_cm3,
            "tensile_strength_mpa": result.winner.tensile_strength_mpa,
            "max_temperature_c": result.winner.max_temperature_c,
            "failure_mode": result.winner.failure_mode,
        },
        "requirements": {"t_max_req_c": t_max, "t_min_req_c": t_min},
        "weights": list(weights),
        "suitable": result.suitable,
        "ranking": [
            {"name": s.name, "score": s.score, "contributions": s.contributions}
            for s in result.ranking
        ],
        "filter_flags": result.filter_flags,
        "classifier": (
            {
                "training_accuracy": result.classifier.training_accuracy,
                "margin": result.classifier.margin,
                "weights": list(result.classifier.weights),
                "bias": result.classifier.bias,
                "predictions": result.classifier_predictions,
            }
            if result.classifier is not None
            else None
        ),
    }
    _write_json(report_path, payload)
    bundle.artifacts.append(report_path)

    unverified = [k for k, v in result.filter_flags.items() if "unverified" in v]
    if unverified:
        bundle.warnings.append(
            f"minimum service temperature unverified for: {', '.join(sorted(unverified))}"
        )
    bundle.summary = (
        f"material: winner {result.winner.name} "
        f"({len(result.suitable)}/{len(db)} thermally suitable)"
    )
    return bundle


# ---------------------------------------------------------------------------
# optimize
# ---------------------------------------------------------------------------


def _ga_config_from(config: dict, seed: int) -> optimize.GAConfig:
    return optimize.GAConfig(
        population_size=int(config.get("population_size", 30)),
        generations=int(config.get("generations", 20)),
        stall_generation_limit=int(config.get("stall_generation_limit", 100)),
        fitness_target=float(config.get("fitness_target", 1e-20)),
        elitism=int(config.get("elitism", 2)),
        crossover_rate=float(config.get("crossover_rate", 0.8)),
        mutation_rate=float(config.get("mutation_rate", 0.1)),
        seed=seed,
    )


def _refine_config_from(config: dict) -> optimize.RefineConfig:
    return optimize.RefineConfig(
        fitness_target=float(config.get("fitness_target", 1e-18)),
        tol_x=float(config.get("tol_x", 1e-22)),
        tol_fun=float(config.get("tol_fun", 1e-22)),
        tol_con=float(config.get("tol_con", 1e-22)),
        max_function_evals=int(config.get("max_function_evals", 200_000)),
        max_iterations=int(config.get("max_iterations", 1000)),
    )


def cmd_optimize(config: dict, out_dir: Path, seed: int = DEFAULT_SEED) -> ReportBundle:
    """Surrogate fitting or constrained geometry optimization."""
    task = _require(config, "task", str)
    if task == "surrogate":
        return _optimize_surrogate(config, out_dir, seed)
    if task == "geometry":
        return _optimize_geometry(config, out_dir, seed)
    raise ConfigError(f"config key 'task' must be 'surrogate' or 'geometry', got {task!r}")


def _optimize_surrogate(config: dict, out_dir: Path, seed: int) -> ReportBundle:
    design = _design_from_config(config)
    sur = config.get("surrogate", {})
    slider_speed = float(config.get("slider_speed_m_s", 0.1))
    samples = int(config.get("profile_samples", 101))
    arch = optimize.SurrogateArchitecture(hidden_units=int(sur.get("hidden_units", 10)))
    runs = int(sur.get("runs", 10))

    profile = kinematics.deployment_profile(
        design.unit, slider_speed=slider_speed, direction="deploy", samples=samples
    )
    dataset = optimize.KinematicDataset.from_profile(profile)
    fit = optimize.fit_kinematics_surrogate(
        dataset,
        architecture=arch,
        ga_config=_ga_config_from(sur.get("ga", {}), seed),
        refine_config=_refine_config_from(sur.get("refine", {})),
        runs=runs,
        seed=seed,
    )

    bundle = ReportBundle()
    out_dir.mkdir(parents=True, exist_ok=True)

    trace_path = out_dir / "fitness_trace.csv"
    lines = ["block,run_index,generation,best_fitness"]
    for rec in fit.runs:
        if rec.ga_trace is not None:
            for g, v in enumerate(rec.ga_trace):
                lines.append(f"{rec.block},{rec.run_index},{g},{v:.6g}")
    _write_text(trace_path, "\n".join(lines) + "\n")
    bundle.artifacts.append(trace_path)

    result_path = out_dir / "surrogate_fit.json"
    payload = {
        "seed": seed,
        "architecture": {"hidden_units": arch.hidden_units, "block_size": arch.block_size},
        "runs_per_block": runs,
        "profile": {
            "samples": samples,
            "slider_speed_m_s": slider_speed,
            "aperture_m": design.aperture_m,
        },
        "block_mse": fit.block_mse,
        "chromosome": {key: fit.chromosome.blocks[key] for key in kinematics.CURVE_KEYS},
        "run_records": [
            {
                "block": r.block,
                "run_index": r.run_index,
                "ga_fitness": r.ga_fitness,
                "refined_fitness": r.refined_fitness,
                "generations": r.generations,
                "function_evals": r.function_evals,
            }
            for r in fit.runs
        ],
    }
    _write_json(result_path, payload)
    bundle.artifacts.append(result_path)

    worst = max(fit.block_mse.values())
    total_time = sum(r.wall_time_s for r in fit.runs)
    bundle.summary = (
        "optimize/surrogate: final MSE per normalized curve "
        + ", ".join(f"{k}={v:.3g}" for k, v in fit.block_mse.items())
        + f"; worst {worst:.3g}; total fit time {total_time:.1f} s"
    )
    return bundle


def _optimize_geometry(config: dict, out_dir: Path, seed: int) -> ReportBundle:
    design = _design_from_config(config)
    geo_cfg = config.get("geometry", {})
    window = geo_cfg.get("frequency_window_hz")
    if not (isinstance(window, list) and len(window) == 2):
        raise ConfigError("config key 'geometry.frequency_window_hz' must be [lo, hi]")
    density = geo_cfg.get("linear_density_kg_m", 1.0)
    problem = optimize.GeometryProblem(
        baseline=design,
        radius_min=float(geo_cfg.get("radius_min_m", design.ring_radius * 0.8)),
        frequency_window=(float(window[0]), float(window[1])),
        radius_max=(
            float(geo_cfg["radius_max_m"]) if "radius_max_m" in geo_cfg else None
        ),
        scale_bounds=tuple(geo_cfg.get("scale_bounds", (0.5, 2.0))),
        linear_density=None if density is None else float(density),
        stiffness=float(geo_cfg.get("stiffness_n_m", 1.0)),
    )
    result = optimize.optimize_geometry(problem, _refine_config_from(geo_cfg.get("refine", {})))

    bundle = ReportBundle()
    out_dir.mkdir(parents=True, exist_ok=True)

    trace_path = out_dir / "fitness_trace.csv"
    lines = ["iteration,objective_hz"]
    lines += [f"{i},{v:.6g}" for i, v in enumerate(result.trace)]
    _write_text(trace_path, "\n".join(lines) + "\n")
    bundle.artifacts.append(trace_path)

    report_path = out_dir / "optimized_design.json"
    payload = {
        "feasible": result.feasible,
        "flat_objective": result.flat_objective,
        "radius_m": result.radius_m,
        "aperture_m": None if result.radius_m is None else 2.0 * result.radius_m,
        "frequency_hz": result.frequency_hz,
        "unit_mass_kg": result.unit_mass_kg,
        "scales": result.scales,
        "link_lengths_m": result.link_lengths_m,
        "constraint_report": result.constraint_report,
        "reference_comparison": result.reference_comparison,
        "message": result.message,
        "problem": {
            "radius_min_m": problem.radius_min,
            "radius_max_m": problem.radius_max,
            "frequency_window_hz": list(problem.frequency_window),
            "linear_density_kg_m": problem.linear_density,
            "scale_bounds": list(problem.scale_bounds),
        },
    }
    _write_json(report_path, payload)
    bundle.artifacts.append(report_path)

    if result.flat_objective:
        bundle.warnings.append("flat objective: " + result.message)
    if not result.feasible:
        raise InfeasibleError(result.message)
    bundle.summary = (
        f"optimize/geometry: radius {result.radius_m:.3f} m, "
        f"f_n {result.frequency_hz:.4f} Hz, {len(result.trace)} accepted iterate(s); "
        f"reference pair differs by "
        f"{result.reference_comparison['reference_relative_difference_pct']:.2f}%"
    )
    return bundle


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------

_COMMANDS = {
    "design": cmd_design,
    "analyze": cmd_analyze,
    "material": cmd_material,
    "optimize": cmd_optimize,
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="scissortruss",
        description="Deployable scissor-truss design and analysis toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, func in _COMMANDS.items():
        p = sub.add_parser(name, help=func.__doc__)
        p.add_argument("--config", required=True, help="path to the JSON run config")
        p.add_argument("--out", default="out", help="output directory (default: ./out)")
        p.add_argument("--seed", type=int, default=DEFAULT_SEED)
        p.add_argument("--quiet", action="store_true")
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_CONFIG if exc.code not in (0, None) else 0

    config_path = Path(args.config)
    try:
        text = config_path.read_text()
    except OSError as exc:
        print(f"error: cannot read config: {exc}", file=sys.stderr)
        return EXIT_IO
    try:
        config = json.loads(text)
    except json.JSONDecodeError as exc:
        print(
            f"error: malformed JSON in {config_path} at line {exc.lineno}, "
            f"column {exc.colno}: {exc.msg}",
            file=sys.stderr,
        )
        return EXIT_CONFIG
    if not isinstance(config, dict):
        print("error: config root must be a JSON object", file=sys.stderr)
        return EXIT_CONFIG

    try:
        bundle = _COMMANDS[args.command](config, Path(args.out), args.seed)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except InfeasibleError as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except (LookupError, ValueError) as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO

    if not args.quiet:
        print(bundle.summary)
        for warning in bundle.warnings:
            print(f"warning: {warning}")
        for artifact in bundle.artifacts:
            print(f"wrote {artifact}")
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
