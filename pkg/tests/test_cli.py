import json
import shutil
import subprocess
import sys
from xml.etree import ElementTree

import pytest

from scissortruss import cli, refdata


def write_config(tmp_path, payload, name="config.json"):
    path = tmp_path / name
    path.write_text(json.dumps(payload))
    return path


def run_cli(args):
    return cli.main([str(a) for a in args])


class TestDesignCommand:
    def test_metrics_csv_contains_storage_ratio(self, tmp_path):
        cfg = write_config(tmp_path, {"aperture_m": 25, "unit_count": 12})
        out = tmp_path / "out"
        assert run_cli(["design", "--config", cfg, "--out", out, "--quiet"]) == 0
        text = (out / "design_metrics.csv").read_text()
        header = text.splitlines()[0].split(",")
        row = text.splitlines()[1].split(",")
        sr_volume = float(row[header.index("Storage Ratio (Volume)")])
        assert sr_volume == pytest.approx(27.6, rel=5e-3)

    def test_without_links_constant_height_ratio(self, tmp_path):
        cfg = write_config(
            tmp_path,
            {"apertures_m": [6, 13, 15, 25, 28, 30], "with_links": False},
        )
        out = tmp_path / "out"
        assert run_cli(["design", "--config", cfg, "--out", out, "--quiet"]) == 0
        lines = (out / "design_metrics.csv").read_text().splitlines()
        header = lines[0].split(",")
        idx = header.index("Storage Ratio (Height)")
        ratios = [float(line.split(",")[idx]) for line in lines[1:]]
        assert len(ratios) == 6
        for r in ratios:
            assert r == pytest.approx(0.765, rel=5e-3)

    def test_missing_aperture_key_exits_2_without_files(self, tmp_path):
        cfg = write_config(tmp_path, {"unit_count": 12})
        out = tmp_path / "out"
        assert run_cli(["design", "--config", cfg, "--out", out, "--quiet"]) == 2
        assert not out.exists()

    def test_malformed_json_exits_2(self, tmp_path):
        cfg = tmp_path / "broken.json"
        cfg.write_text("{not json")
        assert run_cli(["design", "--config", cfg, "--out", tmp_path / "o"]) == 2

    def test_unreadable_config_exits_4(self, tmp_path):
        assert run_cli(["design", "--config", tmp_path / "nope.json", "--out", tmp_path]) == 4

    def test_link_table_written(self, tmp_path):
        cfg = write_config(tmp_path, {"aperture_m": 25})
        out = tmp_path / "out"
        run_cli(["design", "--config", cfg, "--out", out, "--quiet"])
        lines = (out / "unit_links.csv").read_text().splitlines()
        assert lines[0] == "link,length_m"
        assert len(lines) == 15
        assert lines[1].startswith("L1,")
        assert float(lines[1].split(",")[1]) == pytest.approx(6.645, abs=0.01)


class TestAnalyzeCommand:
    @pytest.fixture()
    def analyze_out(self, tmp_path):
        cfg = write_config(tmp_path, {"aperture_m": 25, "profile_samples": 41})
        out = tmp_path / "out"
        code = run_cli(["analyze", "--config", cfg, "--out", out, "--quiet"])
        assert code == 0
        return out

    def test_report_contains_natural_frequency(self, analyze_out):
        report = json.loads((analyze_out / "analysis_report.json").read_text())
        assert report["natural_frequency"]["f_n_hz"] == pytest.approx(0.1414, abs=2e-4)
        assert report["natural_frequency"]["omega_n_rad_s"] == pytest.approx(0.888, abs=1e-3)

    def test_mobility_discrepancy_warning(self, analyze_out):
        report = json.loads((analyze_out / "analysis_report.json").read_text())
        assert report["mobility"]["formula_value"] == -1
        assert report["mobility"]["warnings"]

    def test_profile_csv_and_svg_plots(self, analyze_out):
        lines = (analyze_out / "deployment_profile.csv").read_text().splitlines()
        assert lines[0] == "t_s,theta_rad,point,x_m,y_m,vx,vy,ax,ay"
        assert len(lines) > 41
        for key in (
            "linear_velocity",
            "angular_velocity",
            "linear_acceleration",
            "angular_acceleration",
        ):
            svg = analyze_out / f"{key}.svg"
            assert svg.exists()
            root = ElementTree.fromstring(svg.read_text())
            assert root.tag.endswith("svg")

    def test_reference_comparison_rows(self, analyze_out):
        report = json.loads((analyze_out / "analysis_report.json").read_text())
        rows = report["frequency_comparisons"]
        row25 = next(
            r for r in rows if r["label"] == "25 m" and r["simulated_hz"] is not None
        )
        assert row25["relative_difference"] == pytest.approx(0.196, abs=2e-3)
        antennas = report["existing_antenna_frequencies"]
        assert any(r["antenna"] == "AstroMesh" for r in antennas)

    def test_zero_length_profile_header_only(self, tmp_path):
        cfg = write_config(tmp_path, {"aperture_m": 25, "profile_samples": 0})
        out = tmp_path / "out0"
        assert run_cli(["analyze", "--config", cfg, "--out", out, "--quiet"]) == 0
        text = (out / "deployment_profile.csv").read_text()
        assert text.strip() == "t_s,theta_rad,point,x_m,y_m,vx,vy,ax,ay"

    def test_infeasible_angles_exit_3_with_bound_name(self, tmp_path, capsys):
        cfg = write_config(
            tmp_path, {"aperture_m": 25, "deployed_angle_deg": 10, "stowed_angle_deg": 40}
        )
        code = run_cli(["analyze", "--config", cfg, "--out", tmp_path / "o"])
        assert code == 3
        err = capsys.readouterr().err
        assert "stowed" in err and "deployed" in err


class TestMaterialCommand:
    def test_bundled_table_winner(self, tmp_path):
        cfg = write_config(tmp_path, {})
        out = tmp_path / "out"
        assert run_cli(["material", "--config", cfg, "--out", out, "--quiet"]) == 0
        report = json.loads((out / "material_selection.json").read_text())
        assert report["winner"] == "M55J/954-6"
        assert report["classifier"]["training_accuracy"] <= 1.0
        scores = (out / "material_scores.csv").read_text().splitlines()
        assert scores[0].startswith("name,score")
        assert scores[1].split(",")[0] == "M55J/954-6"

    def test_custom_single_candidate_db(self, tmp_path):
        db = tmp_path / "db.csv"
        db.write_text(
            "name,youngs_modulus_gpa,density_g_cm3,poissons_ratio,cte_um_m_c,"
            "yield_strength_mpa,tensile_strength_mpa,ultimate_strength_mpa,"
            "elastic_limit_mpa,breaking_strength_mpa,failure_mode,"
            "max_temperature_c,min_temperature_c\n"
            "OnlyOne,100,2.0,0.3,1.0,400,500,550,380,520,ductile,250,\n"
        )
        cfg = write_config(tmp_path, {"database_csv": str(db)})
        out = tmp_path / "out"
        assert run_cli(["material", "--config", cfg, "--out", out, "--quiet"]) == 0
        report = json.loads((out / "material_selection.json").read_text())
        assert report["winner"] == "OnlyOne"

    def test_unreachable_requirement_exits_3(self, tmp_path):
        cfg = write_config(tmp_path, {"t_max_req_c": 500})
        assert run_cli(["material", "--config", cfg, "--out", tmp_path / "o"]) == 3

    def test_env_var_overrides_data_dir(self, tmp_path, monkeypatch):
        alt = tmp_path / "data"
        shutil.copytree(refdata.data_dir(), alt)
        text = (alt / "materials.csv").read_text()
        (alt / "materials.csv").write_text(text.replace("M55J/954-6", "M55J-CUSTOM"))
        monkeypatch.setenv(refdata.DATA_ENV_VAR, str(alt))
        assert refdata.data_dir() == alt
        cfg = write_config(tmp_path, {})
        out = tmp_path / "out"
        assert run_cli(["material", "--config", cfg, "--out", out, "--quiet"]) == 0
        report = json.loads((out / "material_selection.json").read_text())
        assert report["winner"] == "M55J-CUSTOM"


class TestOptimizeCommand:
    SURROGATE_CFG = {
        "task": "surrogate",
        "aperture_m": 25,
        "profile_samples": 41,
        "surrogate": {"hidden_units": 3, "runs": 2},
    }

    def test_surrogate_fit_mse_printed_and_small(self, tmp_path, capsys):
        cfg = write_config(tmp_path, self.SURROGATE_CFG)
        out = tmp_path / "out"
        assert run_cli(["optimize", "--config", cfg, "--out", out, "--seed", 5]) == 0
        captured = capsys.readouterr().out
        assert "MSE" in captured
        payload = json.loads((out / "surrogate_fit.json").read_text())
        assert max(payload["block_mse"].values()) <= 1e-4
        assert (out / "fitness_trace.csv").exists()

    def test_byte_identical_artifacts_for_equal_seed(self, tmp_path):
        cfg = write_config(tmp_path, self.SURROGATE_CFG)
        out1, out2 = tmp_path / "a", tmp_path / "b"
        for out in (out1, out2):
            assert (
                run_cli(
                    ["optimize", "--config", cfg, "--out", out, "--seed", 9, "--quiet"]
                )
                == 0
            )
        for name in ("surrogate_fit.json", "fitness_trace.csv"):
            assert (out1 / name).read_bytes() == (out2 / name).read_bytes()

    def test_geometry_task(self, tmp_path):
        cfg = write_config(
            tmp_path,
            {
                "task": "geometry",
                "aperture_m": 25,
                "geometry": {
                    "radius_min_m": 10.0,
                    "frequency_window_hz": [0.018, 0.03],
                },
            },
        )
        out = tmp_path / "out"
        assert run_cli(["optimize", "--config", cfg, "--out", out, "--quiet"]) == 0
        payload = json.loads((out / "optimized_design.json").read_text())
        assert payload["feasible"] is True
        assert payload["radius_m"] >= 10.0
        assert 0.018 <= payload["frequency_hz"] <= 0.03
        assert round(
            payload["reference_comparison"]["reference_relative_difference_pct"], 2
        ) == 1.94
        trace = (out / "fitness_trace.csv").read_text().splitlines()
        values = [float(line.split(",")[1]) for line in trace[1:]]
        assert all(b <= a + 1e-15 for a, b in zip(values, values[1:]))

    def test_infeasible_window_exits_3(self, tmp_path):
        cfg = write_config(
            tmp_path,
            {
                "task": "geometry",
                "aperture_m": 25,
                "geometry": {
                    "radius_min_m": 24.0,
                    "frequency_window_hz": [0.5, 0.6],
                },
            },
        )
        out = tmp_path / "out"
        assert run_cli(["optimize", "--config", cfg, "--out", out, "--quiet"]) == 3
        payload = json.loads((out / "optimized_design.json").read_text())
        assert payload["feasible"] is False

    def test_unknown_task_exits_2(self, tmp_path):
        cfg = write_config(tmp_path, {"task": "levitation", "aperture_m": 25})
        assert run_cli(["optimize", "--config", cfg, "--out", tmp_path / "o"]) == 2


class TestDeterminismAcrossCommands:
    def test_design_and_analyze_artifacts_reproducible(self, tmp_path):
        cfg_d = write_config(tmp_path, {"aperture_m": 25}, "d.json")
        cfg_a = write_config(
            tmp_path, {"aperture_m": 25, "profile_samples": 21}, "a.json"
        )
        outs = []
        for tag in ("one", "two"):
            od, oa = tmp_path / f"d_{tag}", tmp_path / f"a_{tag}"
            assert run_cli(["design", "--config", cfg_d, "--out", od, "--quiet"]) == 0
            assert run_cli(["analyze", "--config", cfg_a, "--out", oa, "--quiet"]) == 0
            outs.append((od, oa))
        (d1, a1), (d2, a2) = outs
        assert (d1 / "design_summary.json").read_bytes() == (d2 / "design_summary.json").read_bytes()
        assert (a1 / "analysis_report.json").read_bytes() == (a2 / "analysis_report.json").read_bytes()
        assert (a1 / "deployment_profile.csv").read_bytes() == (a2 / "deployment_profile.csv").read_bytes()

    def test_csv_roundtrip_at_printed_precision(self, tmp_path):
        from scissortruss import geometry as geo

        cfg = write_config(tmp_path, {"apertures_m": [6, 25]})
        out = tmp_path / "out"
        run_cli(["design", "--config", cfg, "--out", out, "--quiet"])
        lines = (out / "design_metrics.csv").read_text().splitlines()
        rows = geo.table_row_set([6.0, 25.0])
        for line, row in zip(lines[1:], rows):
            parsed = [float(v) for v in line.split(",")]
            expected = [
                row.aperture_m, row.stretched_length, row.deployed_height,
                row.stowed_height, row.deployed_diameter, row.stowed_diameter,
                row.deployed_volume, row.stowed_volume, row.sr_diameter,
                row.sr_height, row.sr_volume,
            ]
            for p, e in zip(parsed, expected):
                assert p == float(f"{e:.6g}")


class TestConsoleEntryPoint:
    def test_module_invocation(self, tmp_path):
        cfg = write_config(tmp_path, {"aperture_m": 25})
        out = tmp_path / "out"
        proc = subprocess.run(
            [
                sys.executable,
                "-m",
                "scissortruss.cli",
                "design",
                "--config",
                str(cfg),
                "--out",
                str(out),
            ],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert "design:" in proc.stdout
        assert (out / "design_metrics.csv").exists()
