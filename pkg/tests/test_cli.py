"""Tests for the command-line interface: exit codes, formats, determinism."""

import json
import math

import numpy as np
import pytest

from kmodes.cli import run
from kmodes.dataio import export_csv, format_float
from kmodes.figures import PRESETS, figure_dataset
from kmodes.verify import ComplexSeries, TimeGrid


class TestFormatting:
    def test_format_float_roundtrip(self):
        for x in (0.0, 1.0, -1.0, 0.1, 2.3732234627965165, 1e-300):
            assert float(format_float(x)) == x

    def test_nan(self):
        assert format_float(float("nan")) == "nan"

    def test_export_csv_exact_bytes(self, tmp_path):
        grid = TimeGrid(0.0, 1.0, 2)
        series = ComplexSeries(grid, np.array([1 + 0j, 0 - 1j]))
        dest = tmp_path / "two.csv"
        export_csv(series, str(dest))
        assert dest.read_bytes() == b"t,re,im\n0.0,1.0,0.0\n1.0,0.0,-1.0\n"


class TestEval:
    def test_csv_stdout(self, capsys):
        rc = run(["eval", "--kappa", "+1", "--K", "0.5", "--t0", "0", "--t1", "1",
                  "--n", "5"])
        assert rc == 0
        out = capsys.readouterr().out
        lines = out.strip().split("\n")
        assert lines[0] == "t,re,im"
        assert len(lines) == 6

    def test_json_payload(self, capsys):
        rc = run(["eval", "--kappa", "+1", "--K", "0.5", "--t0", "0", "--t1", "1",
                  "--n", "4", "--format", "json"])
        assert rc == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["grid"] == {"t0": 0.0, "t1": 1.0, "n": 4}
        assert len(payload["values"]) == 4
        assert payload["params"]["K"] == 0.5

    def test_determinism(self, tmp_path):
        args = ["eval", "--kappa", "+1", "--K", "0.01", "--alpha", "0.5,0",
                "--beta", "0.5,0", "--t0", "0", "--t1", "5", "--n", "200",
                "--quantity", "bosonic"]
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        assert run(args + ["--out", str(a)]) == 0
        assert run(args + ["--out", str(b)]) == 0
        assert a.read_bytes() == b.read_bytes()

    def test_masked_rows_are_nan(self, tmp_path):
        dest = tmp_path / "masked.csv"
        rc = run(["eval", "--kappa", "+1", "--K", "0.01", "--alpha", "0.5,0",
                  "--beta", "0.5,0", "--t0", "0", "--t1", "3.1416", "--n", "2001",
                  "--out", str(dest)])
        assert rc == 0
        text = dest.read_text()
        assert ",nan,nan" in text

    def test_invalid_kappa_exit_2(self, capsys):
        rc = run(["eval", "--kappa", "0", "--K", "0.5", "--t0", "0", "--t1", "1"])
        assert rc == 2
        assert "--kappa" in capsys.readouterr().err

    def test_coupling_quantity_rejects_zero_k(self, capsys):
        rc = run(["eval", "--kappa", "+1", "--K", "0", "--t0", "0.1", "--t1", "1",
                  "--n", "4", "--quantity", "fermionic-coupling"])
        assert rc == 2

    def test_zero_k_uses_limit_form(self, capsys):
        rc = run(["eval", "--kappa", "+1", "--K", "0", "--alpha", "0.5,0",
                  "--beta", "0.5,0", "--t0", "0", "--t1", "1", "--n", "3",
                  "--format", "json"])
        assert rc == 0
        payload = json.loads(capsys.readouterr().out)
        re0, im0 = payload["values"][0]
        # 2i*alpha + 4i*beta at t=0 -> i + 2i = 3i
        assert (re0, im0) == (0.0, 3.0)

    def test_small_k_quantity(self, capsys):
        rc = run(["eval", "--kappa", "+1", "--K", "0.01", "--t0", "0", "--t1", "1",
                  "--n", "4", "--quantity", "bosonic-small-k"])
        assert rc == 0


class TestEvalMulti:
    def test_runs(self, capsys):
        rc = run(["eval-multi", "--kappa", "+1", "--K1", "0.3", "--K2", "0.1",
                  "--K1p", "0.2", "--K2p", "0.4", "--alpha", "1,0",
                  "--t0", "0", "--t1", "1", "--n", "5"])
        assert rc == 0
        assert capsys.readouterr().out.startswith("t,re,im")

    def test_gauge_quantity_differs(self, capsys):
        base = ["eval-multi", "--kappa", "+1", "--K1", "0.5", "--K2", "0.1",
                "--K1p", "0.2", "--K2p", "0.4", "--t0", "0.3", "--t1", "1",
                "--n", "3", "--format", "json"]
        assert run(base + ["--quantity", "z"]) == 0
        z_out = json.loads(capsys.readouterr().out)
        assert run(base + ["--quantity", "w"]) == 0
        w_out = json.loads(capsys.readouterr().out)
        zv = complex(*z_out["values"][0])
        wv = complex(*w_out["values"][0])
        assert abs(abs(wv) - abs(zv)) < 1e-12  # unimodular gauge factor
        assert wv != zv


class TestVerify:
    def test_pass(self, capsys):
        rc = run(["verify", "--kappa", "+1", "--K", "2", "--t0", "0",
                  "--t1", "1.4", "--n", "100", "--tol", "1e-8"])
        assert rc == 0
        payload = json.loads(capsys.readouterr().out)
        rep = payload["report"]
        assert rep["pass"] is True
        assert {"max_abs", "max_rel", "argmax_t"} <= set(rep)

    def test_fail_exit_1(self, capsys):
        rc = run(["verify", "--kappa", "+1", "--K", "2", "--t0", "0",
                  "--t1", "1.4", "--n", "50", "--tol", "1e-16"])
        assert rc == 1
        payload = json.loads(capsys.readouterr().out)
        assert payload["report"]["pass"] is False

    def test_grid_in_mask_exit_2(self, capsys):
        # 201 points on [0, pi] place one exactly on the singular time pi/2
        rc = run(["verify", "--kappa", "+1", "--K", "0.5", "--t0", "0",
                  "--t1", "3.141592653589793", "--n", "201", "--tol", "1e-8"])
        assert rc == 2

    def test_inverted_branch(self, capsys):
        rc = run(["verify", "--kappa", "-1", "--K", "0.5", "--t0", "0.5",
                  "--t1", "3", "--n", "80", "--tol", "1e-8"])
        assert rc == 0


class TestFigure:
    def test_columns(self):
        assert PRESETS["fig1"].columns == ("t", "K", "re", "im")
        assert PRESETS["fig3"].columns == ("t", "re", "im")
        assert PRESETS["fig8"].columns == ("t", "re", "im", "ref")

    def test_unknown_name_exit_2(self, capsys):
        assert run(["figure", "fig10"]) == 2

    def test_fig8_reference_column(self):
        data = figure_dataset("fig8")
        t, re, im, ref = data.rows[10]
        assert ref == pytest.approx(-1.0 / math.cos(t))

    def test_fig8_gap_reported(self):
        # diagnostic only: how closely the reciprocal mode tracks the
        # reference away from singular times (no assertion on the size)
        arr = np.array(figure_dataset("fig8").rows)
        ok = np.isfinite(arr[:, 1]) & (np.abs(arr[:, 3]) < 5.0)
        gap = np.abs(arr[ok, 1] - arr[ok, 3]) / np.abs(arr[ok, 3])
        assert np.all(np.isfinite(gap))
        print(f"fig8 reciprocal-vs-reference max relative gap: {gap.max():.3e}")

    def test_fig3_determinism(self, tmp_path):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        assert run(["figure", "fig3", "--out", str(a)]) == 0
        assert run(["figure", "fig3", "--out", str(b)]) == 0
        assert a.read_bytes() == b.read_bytes()

    def test_plot_rendering(self, tmp_path):
        png = tmp_path / "fig3.png"
        csv = tmp_path / "fig3.csv"
        rc = run(["figure", "fig3", "--out", str(csv), "--plot", str(png)])
        assert rc == 0
        assert png.stat().st_size > 1000
        assert csv.exists()

    def test_fig3_extrema_spacing(self):
        # dominant extrema of the near-unit-amplitude oscillation; the small
        # coupling ripple near the zero crossings is filtered by prominence
        data = figure_dataset("fig3")
        arr = np.array(data.rows)
        t, re = arr[:, 0], arr[:, 1]
        ok = np.isfinite(re)
        t, re = t[ok], re[ok]
        sign = np.sign(np.diff(re))
        flips = np.nonzero(sign[1:] * sign[:-1] < 0)[0]
        keep = np.abs(re[flips + 1]) > 0.5
        extrema = t[flips + 1][keep]
        gaps = np.diff(extrema)
        assert len(gaps) >= 4
        assert np.all(np.abs(gaps - math.pi) < 0.01 * math.pi)


class TestApps:
    def test_schumann_exact(self, capsys):
        rc = run(["app", "schumann", "--Q", "10", "--format", "json"])
        assert rc == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["omega_sq"] == [0.9, 0.1]

    def test_schumann_csv(self, capsys):
        rc = run(["app", "schumann", "--Q", "10"])
        assert rc == 0
        out = capsys.readouterr().out
        assert out == "omega_sq_re,omega_sq_im\n0.9,0.1\n"

    def test_waveguide(self, capsys):
        rc = run(["app", "waveguide", "--kappa", "+1", "--k0", "1", "--K", "0.5",
                  "--x0", "0", "--x1", "1.4", "--n", "5"])
        assert rc == 0
        lines = capsys.readouterr().out.strip().split("\n")
        assert lines[0] == "x,nb2_re,nb2_im,nf2_re,nf2_im"
        first = [float(v) for v in lines[1].split(",")]
        assert first[1:] == [1.0, 0.0, -1.0, 0.0]

    def test_scarf(self, capsys):
        rc = run(["app", "scarf", "--a", "3.141592653589793", "--s", "0.3",
                  "--lambda", "1.2", "--alpha", "1,0", "--x0", "0.1",
                  "--x1", "1.5", "--n", "5"])
        assert rc == 0
        assert capsys.readouterr().out.startswith("t,re,im")

    def test_scarf_domain_error_exit_2(self, capsys):
        rc = run(["app", "scarf", "--a", "3.14", "--s", "0.3", "--lambda", "1.2",
                  "--x0", "0.1", "--x1", "3.0", "--n", "5"])
        assert rc == 2


class TestHelp:
    def test_help_exits_zero(self):
        assert run(["--help"]) == 0

    def test_missing_subcommand_exit_2(self):
        assert run([]) == 2

    def test_write_failure_exit_3(self, capsys):
        rc = run(["app", "schumann", "--Q", "10",
                  "--out", "/nonexistent-dir/out.csv"])
        assert rc == 3
        assert "write failure" in capsys.readouterr().err
