import json

import pytest

from diminterp import cli

FAST = ["--opt-restarts", "4"]


def run(argv):
    return cli.main(argv)


class TestAtomCommand:
    def test_helium_report(self, capsys):
        assert run(["atom", "--element", "he"] + FAST) == 0
        out = capsys.readouterr().out
        assert "interpolated eps3 (exact_constant eps1): -0.7257" in out
        assert "error = 0.02%" in out

    def test_helium_json(self, capsys):
        assert run(["atom", "--element", "he", "--output-format", "json"]
                   + FAST) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["eps3"] == pytest.approx(-0.725780, abs=1e-5)
        assert payload["xi0"] == pytest.approx(0.875, abs=1e-12)
        assert payload["percent_error"] == pytest.approx(0.02, abs=0.01)

    def test_lithium_report(self, capsys):
        assert run(["atom", "--element", "li"] + FAST) == 0
        out = capsys.readouterr().out
        assert "-0.839644" in out or "-0.839648" in out

    def test_unknown_element_exits_2(self):
        with pytest.raises(SystemExit) as exc:
            run(["atom", "--element", "xx"])
        assert exc.value.code == 2

    def test_report_to_file(self, tmp_path, capsys):
        path = tmp_path / "he.txt"
        assert run(["atom", "--element", "he", "--output", str(path)]
                   + FAST) == 0
        assert "interpolated eps3" in path.read_text()


class TestH2CurveCommand:
    def test_csv_shape_and_rows(self, capsys):
        assert run(["h2-curve", "--r-min", "1", "--r-max", "2",
                    "--points", "2"] + FAST) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines[0] == "R,eps1_scaled,epsinf_scaled,eps3,binding"
        assert len(lines) == 3

    def test_row_arithmetic(self, capsys):
        assert run(["h2-curve", "--r-min", "1", "--r-max", "3",
                    "--points", "3"] + FAST) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        for line in lines[1:]:
            R, e1, einf, eps3, binding = map(float, line.split(","))
            assert binding - eps3 == pytest.approx(1.0 / R, abs=1e-7)
            assert eps3 == pytest.approx(e1 + einf, abs=1e-7)

    def test_dissociation_row(self, capsys):
        # the binding energy, not the bare electronic energy, carries the
        # dissociation limit: at R=10 it already sits within 0.02 of -1
        assert run(["h2-curve", "--r-min", "10", "--r-max", "10.5",
                    "--points", "2"] + FAST) == 0
        first_row = capsys.readouterr().out.strip().splitlines()[1]
        binding = float(first_row.split(",")[-1])
        assert binding == pytest.approx(-1.0, abs=0.02)

    def test_json_output(self, capsys):
        assert run(["h2-curve", "--r-min", "1", "--r-max", "2",
                    "--points", "2", "--output-format", "json"] + FAST) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["R"] == [1.0, 2.0]
        assert len(payload["binding"]) == 2

    def test_determinism_byte_identical(self, tmp_path):
        paths = [tmp_path / "a.csv", tmp_path / "b.csv"]
        for p in paths:
            assert run(["h2-curve", "--r-min", "1", "--r-max", "2",
                        "--points", "3", "--seed", "5",
                        "--output", str(p)] + FAST) == 0
        assert paths[0].read_bytes() == paths[1].read_bytes()

    def test_unwritable_path_exits_4(self):
        assert run(["h2-curve", "--points", "2", "--r-min", "1",
                    "--r-max", "2",
                    "--output", "/nonexistent-dir/out.csv"] + FAST) == 4

    def test_bad_grid_exits_2(self):
        with pytest.raises(SystemExit) as exc:
            run(["h2-curve", "--points", "1"])
        assert exc.value.code == 2
        with pytest.raises(SystemExit) as exc:
            run(["h2-curve", "--r-min", "3", "--r-max", "2", "--points", "4"])
        assert exc.value.code == 2


class TestCompareCommand:
    def _write_curve(self, tmp_path, args):
        out = tmp_path / "curve.csv"
        assert run(["h2-curve", "--output", str(out)] + args + FAST) == 0
        return out

    def _curve_as_reference(self, curve_path, ref_path):
        lines = curve_path.read_text().strip().splitlines()
        rows = ["R,E"]
        for line in lines[1:]:
            parts = line.split(",")
            rows.append(f"{parts[0]},{parts[4]}")
        ref_path.write_text("\n".join(rows) + "\n")

    def test_round_trip_rmse_zero(self, tmp_path, capsys):
        grid = ["--r-min", "1", "--r-max", "2", "--points", "3"]
        curve = self._write_curve(tmp_path, grid)
        ref = tmp_path / "ref.csv"
        self._curve_as_reference(curve, ref)
        assert run(["compare", "--reference", str(ref)] + grid + FAST) == 0
        out = capsys.readouterr().out
        rmse = float(out.splitlines()[0].split("=")[1])
        assert rmse == pytest.approx(0.0, abs=1e-8)

    def test_uniform_shift(self, tmp_path, capsys):
        grid = ["--r-min", "1", "--r-max", "2", "--points", "3"]
        curve = self._write_curve(tmp_path, grid)
        ref = tmp_path / "ref.csv"
        lines = curve.read_text().strip().splitlines()
        rows = ["R,E"]
        for line in lines[1:]:
            parts = line.split(",")
            rows.append(f"{parts[0]},{float(parts[4]) + 0.01}")
        ref.write_text("\n".join(rows) + "\n")
        assert run(["compare", "--reference", str(ref)] + grid + FAST) == 0
        out = capsys.readouterr().out
        values = dict(line.replace(" ", "").split("=")
                      for line in out.strip().splitlines())
        assert float(values["rmse"]) == pytest.approx(0.01, abs=1e-8)
        assert float(values["max_abs_err"]) == pytest.approx(0.01, abs=1e-8)

    def test_malformed_header_exits_5(self, tmp_path, capsys):
        ref = tmp_path / "bad.csv"
        ref.write_text("x,y\n1,2\n2,3\n")
        with pytest.raises(SystemExit) as exc:
            run(["compare", "--reference", str(ref), "--points", "2",
                 "--r-min", "1", "--r-max", "2"] + FAST)
        assert exc.value.code == 5
        assert ":1:" in capsys.readouterr().err

    def test_malformed_value_reports_line_number(self, tmp_path, capsys):
        ref = tmp_path / "bad.csv"
        ref.write_text("R,E\n1,-1.0\n2,oops\n")
        with pytest.raises(SystemExit) as exc:
            run(["compare", "--reference", str(ref), "--points", "2",
                 "--r-min", "1", "--r-max", "2"] + FAST)
        assert exc.value.code == 5
        assert ":3:" in capsys.readouterr().err

    def test_empty_overlap_exits_5(self, tmp_path):
        ref = tmp_path / "far.csv"
        ref.write_text("R,E\n30,-1.0\n40,-1.0\n")
        assert run(["compare", "--reference", str(ref), "--points", "2",
                    "--r-min", "1", "--r-max", "2"] + FAST) == 5

    def test_missing_reference_exits_5(self, tmp_path):
        with pytest.raises(SystemExit) as exc:
            run(["compare", "--reference", str(tmp_path / "none.csv"),
                 "--points", "2", "--r-min", "1", "--r-max", "2"] + FAST)
        assert exc.value.code == 5


class TestNonConvergenceExit:
    def test_atom_nonconvergence_exits_3(self, monkeypatch):
        from diminterp.errors import NonConvergenceError

        def boom(*args, **kwargs):
            raise NonConvergenceError("synthetic failure")

        monkeypatch.setattr(cli.interp, "prepare_atom_inputs", boom)
        assert run(["atom", "--element", "he"] + FAST) == 3

    def test_curve_nonconvergence_exits_3(self, monkeypatch):
        from diminterp.errors import NonConvergenceError

        def boom(*args, **kwargs):
            raise NonConvergenceError("synthetic failure")

        monkeypatch.setattr(cli.interp, "build_curve", boom)
        assert run(["h2-curve", "--r-min", "1", "--r-max", "2",
                    "--points", "2"] + FAST) == 3


class TestEnvironmentRestarts:
    def test_env_var_sets_default(self, monkeypatch):
        monkeypatch.setenv(cli.RESTARTS_ENV, "5")
        parser = cli.build_parser()
        args = parser.parse_args(["h2-curve"])
        assert args.restarts == 5

    def test_invalid_env_var_exits_2(self, monkeypatch):
        monkeypatch.setenv(cli.RESTARTS_ENV, "zero")
        with pytest.raises(SystemExit) as exc:
            cli.build_parser().parse_args(["h2-curve"])
        assert exc.value.code == 2
