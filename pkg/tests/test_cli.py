import csv
import io
import json
import locale
import subprocess
import sys

import pytest

from oracles import DS_ZERO_HALF, HARMONIC_AT_HALF, HOL_AT_HALF
from stripschwarz.cli import fmt_complex, fmt_real, parse_complex, run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def rows(text):
    return dict(line.split(None, 1) for line in text.strip().splitlines())


class TestParsing:
    @pytest.mark.parametrize("text, z", [
        ("0.5", 0.5), ("0.5i", 0.5j), ("-i", -1j), ("0.3+0.4i", 0.3 + 0.4j),
        ("0.3-0.4i", 0.3 - 0.4j), ("0.3,0.4", 0.3 + 0.4j), ("-1e-3,2", -1e-3 + 2j),
        (" 0.1 + 0.2i ", 0.1 + 0.2j), ("1+2j", 1 + 2j),
    ])
    def test_forms(self, text, z):
        assert parse_complex(text) == z

    @pytest.mark.parametrize("text", ["", "abc", "1+2k", "nan", "inf,0"])
    def test_rejects(self, text):
        with pytest.raises(ValueError):
            parse_complex(text)

    def test_formatting(self):
        assert fmt_real(DS_ZERO_HALF) == "0.8813736"
        assert fmt_real(-1e-12) == "0.0000000"
        assert fmt_complex(0.5 - 0.25j) == "0.5000000-0.2500000i"
        assert fmt_complex(complex(0.1, -1e-12)) == "0.1000000+0.0000000i"

    def test_locale_independent(self):
        old = locale.setlocale(locale.LC_NUMERIC)
        try:
            for name in ("de_DE.UTF-8", "fr_FR.UTF-8"):
                try:
                    locale.setlocale(locale.LC_NUMERIC, name)
                except locale.Error:
                    continue
                assert fmt_real(0.5) == "0.5000000"
        finally:
            locale.setlocale(locale.LC_NUMERIC, old)


class TestCommands:
    def test_dist(self):
        code, out, _ = call("dist", "--domain", "strip", "--from", "0", "--to", "0.5")
        assert code == 0
        assert rows(out)["distance"] == f"{DS_ZERO_HALF:.7f}"

    def test_dist_disc_json(self):
        code, out, _ = call("dist", "--domain", "disc", "--from", "0", "--to", "0,0.5",
                            "--output", "json")
        assert code == 0
        data = json.loads(out)
        assert data["distance"] == pytest.approx(1.0986122886681098, abs=1e-12)
        assert data["to"] == [0.0, 0.5]

    def test_extents(self):
        code, out, _ = call("extents", "--r", "0.5")
        r = rows(out)
        assert code == 0
        assert r["re_max"] == f"{HARMONIC_AT_HALF:.7f}"
        assert r["im_max"] == f"{HOL_AT_HALF:.7f}"

    def test_extents_by_lambda_and_offcentre(self):
        code, out, _ = call("extents", "--lambda", "1.0986122886681098", "--b", "0.5",
                            "--output", "json")
        data = json.loads(out)
        assert code == 0
        assert data["re_min"] == pytest.approx(data["re_min_closed"], abs=1e-7)
        assert data["re_max"] == pytest.approx(data["re_max_closed"], abs=1e-7)

    def test_bounds_csv(self):
        code, out, _ = call("bounds", "--r", "0.5", "--K", "2", "--output", "csv")
        table = dict(csv.reader(io.StringIO(out)))
        assert code == 0
        assert table["harmonic_disc"] == f"{HARMONIC_AT_HALF:.7f}"
        assert table["hol_strip"] == f"{HOL_AT_HALF:.7f}"

    def test_map_eval(self):
        code, out, _ = call("map-eval", "--map", "psi_K", "--K", "2", "--z", "0.5i",
                            "--output", "json")
        data = json.loads(out)
        assert code == 0
        assert data["f(z)"][1] == pytest.approx(2 * HOL_AT_HALF, abs=1e-12)
        assert data["dilatation"] == pytest.approx(2.0, abs=1e-12)

    @pytest.mark.parametrize("name", ["phi", "phi_b", "tan", "stretch", "automorphism"])
    def test_map_eval_every_map(self, name):
        code, _, _ = call("map-eval", "--map", name, "--z", "0.2+0.1i", "--b", "0.3",
                          "--a", "0.1,0.2")
        assert code == 0

    def test_figure(self, tmp_path):
        path = tmp_path / "fig1.csv"
        code, out, _ = call("figure", "--r", "0.5", "--n", "720", "--out", str(path))
        assert code == 0 and out == ""
        with open(path, newline="") as fh:
            data = list(csv.DictReader(fh))
        assert list(data[0]) == ["curve_id", "theta", "x", "y"]
        strip = [d for d in data if d["curve_id"] == "strip"]
        disc = [d for d in data if d["curve_id"] == "disc"]
        assert len(strip) == len(disc) == 721
        assert (strip[0]["x"], strip[0]["y"]) == (strip[-1]["x"], strip[-1]["y"])
        assert max(float(d["x"]) for d in strip) == pytest.approx(HARMONIC_AT_HALF, abs=1e-5)

    def test_figure_human(self):
        code, out, _ = call("figure", "--r", "0.5")
        assert code == 0 and "strip_x_max" in out


class TestErrors:
    @pytest.mark.parametrize("argv, flag", [
        (["extents", "--r", "1.5"], "--r"),
        (["extents"], "--r"),
        (["bounds", "--r", "0.5", "--K", "0.5"], "--K"),
        (["bounds", "--r", "0.5", "--b", "1"], "--b"),
        (["dist", "--from", "1.2", "--to", "0"], "--from"),
        (["dist", "--domain", "disc", "--from", "0", "--to", "0.6+0.9i"], "--to"),
        (["extents", "--r", "0.5", "--n", "10"], "--n"),
        (["figure", "--lambda", "-1"], "--lambda"),
        (["verify", "--trials", "0"], "--trials"),
        (["dist", "--from", "abc", "--to", "0"], "--from"),
    ])
    def test_usage_errors_name_flag(self, argv, flag):
        code, _, err = call(*argv)
        assert code == 2
        assert f"argument {flag}" in err

    def test_unknown_command(self):
        assert call("nope")[0] == 2

    def test_missing_report(self, tmp_path):
        code, _, err = call("verify", "--report", str(tmp_path / "missing.json"))
        assert code == 2 and "--report" in err


class TestVerifyCommand:
    def test_round_trip_and_exit_codes(self, tmp_path):
        path = tmp_path / "r.json"
        code, _, _ = call("verify", "--seed", "3", "--trials", "8", "--output", "json",
                          "--out", str(path))
        assert code == 0
        _, first, _ = call("verify", "--seed", "3", "--trials", "8")
        _, again, _ = call("verify", "--report", str(path))
        assert again == first
        code, out, _ = call("verify", "--report", str(path), "--output", "json")
        assert code == 0 and out == path.read_text()

    def test_failing_claim_exits_one(self, tmp_path):
        path = tmp_path / "r.json"
        code, _, _ = call("verify", "--trials", "4", "--tol", "1e-300", "--output", "json",
                          "--out", str(path))
        assert code == 1
        data = json.loads(path.read_text())
        assert data["summary"]["failed"] > 0
        assert call("verify", "--report", str(path))[0] == 1

    def test_csv(self):
        code, out, _ = call("verify", "--trials", "4", "--output", "csv")
        header = out.splitlines()[0]
        assert code == 0 and header == "claim_id,pass,trials,seed,tolerance,max_violation"


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "stripschwarz", "dist", "--from", "0", "--to", "0.5"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert f"{DS_ZERO_HALF:.7f}" in proc.stdout
