import json

import numpy as np
import pytest

from sl3charvar import cli
from sl3charvar import linalg as la
from sl3charvar.sampling import random_representation, random_sl3c

IDENTITY_JSON = json.dumps(la.mat3_to_json(la.IDENTITY))

RNG = np.random.default_rng(8)


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestTrace:
    def test_identity(self, capsys):
        code, out, _ = run(capsys, "trace", "--matrix", IDENTITY_JSON)
        assert code == 0
        assert json.loads(out) == {"z": [3.0, 0.0], "w": [3.0, 0.0]}

    def test_csv(self, capsys):
        code, out, _ = run(capsys, "trace", "--matrix", IDENTITY_JSON, "--csv")
        assert code == 0
        assert out.strip() == "3.0,0.0,3.0,0.0"

    def test_from_file(self, capsys, tmp_path):
        path = tmp_path / "m.json"
        path.write_text(IDENTITY_JSON)
        code, out, _ = run(capsys, "trace", "--matrix", f"@{path}")
        assert code == 0


class TestClassifyCanon:
    def test_classify_loxodromic(self, capsys):
        m = np.diag([0.5, 1.0, 2.0]).astype(complex)
        code, out, _ = run(capsys, "classify", "--matrix", json.dumps(la.mat3_to_json(m)), "--model", "h2")
        assert code == 0
        assert json.loads(out) == {"class": "loxodromic"}

    def test_canon_elliptic(self, capsys):
        m = np.diag(np.exp(1j * np.array([2.0, 1.0, -3.0])))
        code, out, _ = run(capsys, "canon", "--matrix", json.dumps(la.mat3_to_json(m)), "--model", "h1")
        assert code == 0
        obj = json.loads(out)
        assert obj["type"] == "elliptic"
        assert obj["a"] == pytest.approx(1.0)
        assert obj["b"] == pytest.approx(2.0)

    def test_not_in_group_is_error(self, capsys):
        m = np.diag([2.0, 1.0, 0.5]).astype(complex)
        code, _, err = run(capsys, "classify", "--matrix", json.dumps(la.mat3_to_json(m)), "--model", "h1")
        assert code == 1
        assert "error" in err


class TestFiber:
    def test_su21_interior(self, capsys):
        code, out, _ = run(capsys, "fiber", "--form", "su21", "--z", "0,0")
        assert code == 0
        obj = json.loads(out)
        assert obj["region"] == "interior"
        assert obj["count"] == 3
        assert len(obj["forms"]) == 3
        assert all(f["type"] == "elliptic" for f in obj["forms"])

    def test_su21_exterior(self, capsys):
        code, out, _ = run(capsys, "fiber", "--form", "su21", "--z", "4,0")
        obj = json.loads(out)
        assert obj["count"] == 1
        assert obj["forms"][0]["type"] == "loxodromic"

    def test_sl3r(self, capsys):
        code, out, _ = run(capsys, "fiber", "--form", "sl3r", "--z", "4,4")
        obj = json.loads(out)
        assert obj["count"] == 1
        m = la.mat3_from_json(obj["lift"])
        assert la.det(m) == 1

    def test_su3_inside_and_outside(self, capsys):
        code, out, _ = run(capsys, "fiber", "--form", "su3", "--z", "0,0")
        assert json.loads(out)["in_image"] is True
        code, out, _ = run(capsys, "fiber", "--form", "su3", "--z", "4,0")
        obj = json.loads(out)
        assert obj["in_image"] is False and obj["count"] == 0

    def test_bad_complex_flag(self, capsys):
        code, _, err = run(capsys, "fiber", "--form", "su21", "--z", "nope")
        assert code == 1


class TestLift:
    def test_lift_from_file(self, capsys, tmp_path):
        gens = random_representation("su3", RNG)
        g = random_sl3c(RNG)
        gi = la.inverse(g)
        obj = {
            "generators": [la.mat3_to_json(g @ a @ gi) for a in gens],
            "involution": "tau1",
        }
        path = tmp_path / "rep.json"
        path.write_text(json.dumps(obj))
        code, out, _ = run(capsys, "lift", "--input", str(path))
        assert code == 0
        res = json.loads(out)
        assert res["real_form"] == "SU3"
        assert res["residual"] < 1e-7

    def test_lift_failure_not_real(self, capsys, tmp_path):
        obj = {
            "generators": [la.mat3_to_json(random_sl3c(RNG)), la.mat3_to_json(random_sl3c(RNG))],
            "involution": "tau0",
        }
        path = tmp_path / "rep.json"
        path.write_text(json.dumps(obj))
        code, _, err = run(capsys, "lift", "--input", str(path))
        assert code == 1
        assert "error" in err


class TestH1:
    def test_json_table(self, capsys):
        code, out, _ = run(capsys, "h1", "--json")
        table = json.loads(out)["table"]
        assert len(table) == 11
        by_key = {(r["involution"], r["stabilizer"]): r["cardinality"] for r in table}
        assert by_key[("tau0", "full")] == 1
        assert by_key[("tau1", "torus_a")] == 4
        assert by_key[("tau2", "gl2")] == 3
        assert by_key[("tau2", "torus_b")] == 1
        assert ("tau1", "torus_b") not in by_key

    def test_text_table(self, capsys):
        code, out, _ = run(capsys, "h1")
        assert code == 0
        assert "tau2" in out and "signs:--" in out


class TestCurve:
    def test_csv_grid(self, capsys):
        code, out, _ = run(capsys, "curve", "--xmin", "-1", "--xmax", "1", "--ymin", "-1", "--ymax", "1", "--step", "1")
        assert code == 0
        lines = out.strip().splitlines()
        assert len(lines) == 9
        first = lines[0].split(",")
        assert len(first) == 4
        assert first[3] in ("interior", "boundary", "center", "exterior")

    def test_png_and_file_output(self, capsys, tmp_path):
        csv_path = tmp_path / "curve.csv"
        png_path = tmp_path / "curve.png"
        code, out, _ = run(
            capsys,
            "curve",
            "--xmin", "-4", "--xmax", "5", "--ymin", "-4", "--ymax", "4",
            "--step", "0.25",
            "--out", str(csv_path),
            "--png", str(png_path),
        )
        assert code == 0
        assert out == ""
        rows = csv_path.read_text().strip().splitlines()
        assert len(rows) == 37 * 33
        regions = {r.rsplit(",", 1)[1] for r in rows}
        assert {"interior", "exterior"} <= regions
        assert png_path.exists() and png_path.stat().st_size > 1000

    def test_bad_step(self, capsys):
        code, _, err = run(capsys, "curve", "--step", "0")
        assert code == 1


class TestSelftest:
    def test_passes_and_deterministic(self, capsys):
        code1, out1, _ = run(capsys, "selftest", "--seed", "0")
        assert code1 == 0
        assert "FAIL" not in out1
        assert out1.count("PASS") >= 25
        code2, out2, _ = run(capsys, "selftest", "--seed", "0")
        assert out2 == out1

    def test_seed_changes_samples_not_verdict(self, capsys):
        code, out, _ = run(capsys, "selftest", "--seed", "123")
        assert code == 0
        assert "FAIL" not in out


class TestUsage:
    def test_unknown_command_exits_2(self):
        with pytest.raises(SystemExit) as exc:
            cli.main(["bogus"])
        assert exc.value.code == 2

    def test_unknown_flag_exits_2(self):
        with pytest.raises(SystemExit) as exc:
            cli.main(["trace", "--nope"])
        assert exc.value.code == 2

    def test_malformed_matrix_exits_1(self, capsys):
        code, _, err = run(capsys, "trace", "--matrix", "[1,2,3]")
        assert code == 1

    def test_json_bit_exact_round_trip(self, capsys):
        m = random_sl3c(RNG)
        code, out, _ = run(capsys, "trace", "--matrix", json.dumps(la.mat3_to_json(m)))
        obj = json.loads(out)
        z = complex(obj["z"][0], obj["z"][1])
        assert z == complex(np.trace(m))
