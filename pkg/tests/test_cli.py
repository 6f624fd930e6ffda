import json
import math

import pytest

from src.functional import Reparametrization
from src.geometry import arc_length, regular_polygon
from src.interfaces import read_map, run, write_curve, write_map


@pytest.fixture
def circles(tmp_path):
    """256-gons of radius 1 and 2 written as CSV curves."""
    small, large = tmp_path / "m.csv", tmp_path / "n.csv"
    write_curve(small, regular_polygon(256))
    write_curve(large, regular_polygon(256, radius=2.0))
    return small, large


def run_json(capsys, argv):
    code = run(argv)
    return code, json.loads(capsys.readouterr().out)


class TestAnalytic:
    def test_phi_min_of_concentric_circles(self, capsys, tmp_path):
        out_v = tmp_path / "v.csv"
        code, payload = run_json(capsys, [
            "analytic", "--lm", repr(2 * math.pi), "--ln", repr(4 * math.pi),
            "--grid", "256", "--out-v", str(out_v),
        ])
        assert code == 0
        assert payload["phi_min"] == pytest.approx(56.5486677646, rel=1e-9)
        assert payload["psi_v"] == pytest.approx(payload["phi_min"], rel=1e-9)
        assert read_map(out_v).grid_size == 256

    def test_shrinking_target_is_a_precondition_error(self, capsys):
        assert run(["analytic", "--lm", "1", "--ln", "0.9"]) == 2
        assert capsys.readouterr().out == ""


class TestDiagnose:
    def test_lengths(self, capsys):
        code, payload = run_json(capsys, ["diagnose", "--lm", "1", "--ln", "0.5"])
        assert code == 0
        assert payload["regime"] == "no-minimum-proven"
        assert payload["phi_min"] is None

    def test_map(self, capsys, tmp_path):
        path = tmp_path / "u.csv"
        write_map(path, Reparametrization.linear(1.0, 2.0, 128))
        code, payload = run_json(capsys, ["diagnose", "--map", str(path)])
        assert code == 0
        assert payload["regime"] == "minimizers-exist"
        assert payload["necessary_condition"]["passed"] is True

    def test_needs_both_lengths(self):
        assert run(["diagnose", "--lm", "1"]) == 1


class TestEnergy:
    def test_identity_on_same_polygon(self, capsys, circles, tmp_path):
        small, _ = circles
        length = arc_length(regular_polygon(256))
        path = tmp_path / "id.csv"
        write_map(path, Reparametrization.linear(length, length, 256))

        code, payload = run_json(capsys, ["energy", "--source", str(small), "--target", str(small), "--map", str(path)])
        assert code == 0
        assert payload["psi"] <= 1e-10

        code, payload = run_json(capsys, [
            "energy", "--source", str(small), "--target", str(small), "--map", str(path), "--full-curve",
        ])
        assert code == 0
        assert payload["functional"] == "phi"
        assert payload["psi"] <= 1e-6

    def test_map_for_other_curves(self, capsys, circles, tmp_path):
        small, large = circles
        path = tmp_path / "u.csv"
        write_map(path, Reparametrization.linear(1.0, 1.0, 256))
        assert run(["energy", "--source", str(small), "--target", str(large), "--map", str(path)]) == 2


class TestMinimize:
    def test_growing_target_converges(self, capsys, circles, tmp_path):
        small, large = circles
        out = tmp_path / "u.csv"
        code, payload = run_json(capsys, [
            "minimize", "--source", str(small), "--target", str(large), "--grid", "128", "--out", str(out),
        ])
        assert code == 0
        assert payload["converged"] is True
        u = read_map(out)
        assert u.grid_size == 128
        assert u.ratio == pytest.approx(2.0, rel=1e-12)

    def test_shrinking_target_exits_with_report(self, capsys, circles, tmp_path):
        small, large = circles
        out = tmp_path / "u.csv"
        code, payload = run_json(capsys, [
            "minimize", "--source", str(large), "--target", str(small),
            "--grid", "64", "--max-iters", "2000", "--out", str(out),
        ])
        assert code == 3
        assert payload["converged"] is False
        assert payload["diagnostic"].startswith("infimum not attained")
        assert out.exists()

    def test_multistart_lists_runs(self, capsys, circles, tmp_path):
        small, large = circles
        code, payload = run_json(capsys, [
            "minimize", "--source", str(small), "--target", str(large), "--grid", "64",
            "--seed", "5", "--multistart", "2", "--out", str(tmp_path / "u.csv"),
        ])
        assert code == 0
        assert [r["seed"] for r in payload["runs"]] == [5, 6]

    def test_overlay_svg(self, capsys, circles, tmp_path):
        small, large = circles
        svg = tmp_path / "u.svg"
        run(["minimize", "--source", str(small), "--target", str(large), "--grid", "64",
             "--out", str(tmp_path / "u.csv"), "--emit-svg", str(svg)])
        capsys.readouterr()
        assert "<svg" in svg.read_text(encoding="utf-8")


class TestSequence:
    def test_csv_output(self, capsys, tmp_path):
        svg = tmp_path / "seq.svg"
        code = run(["sequence", "--lm", "1", "--ln", "0.5", "--kmax", "3", "--grid", "2048", "--emit-svg", str(svg)])
        lines = capsys.readouterr().out.strip().splitlines()
        assert code == 0
        assert lines[0] == "k,delta,psi"
        assert [line.split(",")[0] for line in lines[1:]] == ["1", "2", "3"]
        energies = [float(line.split(",")[2]) for line in lines[1:]]
        assert energies[0] > energies[1] > energies[2]
        assert "<svg" in svg.read_text(encoding="utf-8")

    def test_growing_target_rejected(self):
        assert run(["sequence", "--lm", "1", "--ln", "2", "--kmax", "3"]) == 2


class TestSecondVariation:
    def test_probe_on_slow_map(self, capsys, tmp_path):
        path = tmp_path / "u.csv"
        write_map(path, Reparametrization.linear(1.0, 0.5, 4096))
        code, payload = run_json(capsys, ["second-variation", "--map", str(path), "--probe", "0.5,0.25,0.01"])
        assert code == 0
        assert payload["second_variation"] < 0
        assert payload["truncated"] < 0
        assert payload["necessary_condition"]["passed"] is False

    def test_bad_probe_spec(self, tmp_path):
        path = tmp_path / "u.csv"
        write_map(path, Reparametrization.linear(1.0, 0.5, 256))
        assert run(["second-variation", "--map", str(path), "--probe", "0.5,0.25"]) == 1


class TestTensor:
    def test_fixture(self, capsys, write_text):
        path = write_text("fx.json", json.dumps({
            "dim": 2, "g": [[4, 0], [0, 1]], "b": [[1, 0], [0, 1]], "pullback": [[4, 0], [0, 1]],
        }))
        code, payload = run_json(capsys, ["tensor", "--fixture", str(path)])
        assert code == 0
        assert payload["g_bb"] == pytest.approx(1.0625, rel=1e-12)
        assert payload["strain_energy_density"] == 0.0


class TestErrors:
    def test_no_command(self):
        assert run([]) == 1

    def test_malformed_curve(self, write_text, tmp_path):
        bad = write_text("bad.csv", "0,0\n1,x\n")
        assert run(["minimize", "--source", str(bad), "--target", str(bad), "--out", str(tmp_path / "u.csv")]) == 1

    def test_invalid_solver_setting(self, circles, tmp_path):
        small, large = circles
        assert run(["minimize", "--source", str(small), "--target", str(large),
                    "--grid", "4", "--out", str(tmp_path / "u.csv")]) == 1


class TestReproducibility:
    def minimize_twice(self, capsys, circles, tmp_path, extra):
        small, large = circles
        outputs = []
        for name in ("a", "b"):
            out, svg = tmp_path / f"{name}.csv", tmp_path / f"{name}.svg"
            run(["minimize", "--source", str(small), "--target", str(large), "--grid", "64",
                 "--out", str(out), "--emit-svg", str(svg), *extra])
            outputs.append((capsys.readouterr().out, out.read_bytes(), svg.read_bytes()))
        return outputs

    def test_same_seed_gives_identical_files(self, capsys, circles, tmp_path):
        first, second = self.minimize_twice(capsys, circles, tmp_path, ["--seed", "9"])
        assert first == second
        assert json.loads(first[0])["seed"] == 9

    def test_multistart_gives_identical_files(self, capsys, circles, tmp_path):
        first, second = self.minimize_twice(capsys, circles, tmp_path, ["--seed", "4", "--multistart", "3"])
        assert first == second
        assert [r["seed"] for r in json.loads(first[0])["runs"]] == [4, 5, 6]
