import csv
import io
import json
import subprocess
import sys

import pytest

from qchanghee import verify
from qchanghee.cli import EXIT_DOMAIN, EXIT_OK, EXIT_USAGE, EXIT_VERIFY, parse_number, run
from qchanghee.verify import SuiteReport

P = ["--q", "0.5", "--u", "0.3", "--w", "0.5", "--weights", "1", "2", "--dampings", "1", "1"]


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def records(text):
    return [json.loads(line) for line in text.splitlines()]


def test_parse_number():
    assert parse_number("3") == 3
    assert str(parse_number("1/2")) == "1/2"
    assert parse_number("0.25") == 0.25
    assert parse_number("1+2j") == 1 + 2j
    assert parse_number("-0.5-1.5i") == -0.5 - 1.5j


def test_qeuler_worked_value():
    code, out, _ = call("qeuler", "--n", "1", "--q", "0.5", "--u", "0.3333333333333333",
                        "--weights", "1", "--dampings", "1", "--json")
    assert code == EXIT_OK
    (rec,) = records(out)
    assert abs(rec["value"]["re"] - 0.4) < 1e-12
    assert rec["route"] == "closed_form" and rec["error_bound"] == 0
    assert set(rec) >= {"params", "value", "error_bound", "terms", "route"}


def test_qeuler_routes_agree():
    vals = {}
    for route in ("closed_form", "series", "gf"):
        code, out, _ = call("qeuler", "--n", "0", "1", "2", *P, "--route", route, "--json")
        assert code == EXIT_OK
        vals[route] = [complex(r["value"]["re"], r["value"]["im"]) for r in records(out)]
    for route in ("series", "gf"):
        assert all(abs(a - b) < 1e-10 for a, b in zip(vals[route], vals["closed_form"]))


def test_qeuler_exact():
    code, out, _ = call("qeuler", "--n", "1", "--q", "1/2", "--u", "1/3", "--route", "exact", "--json")
    assert code == EXIT_OK
    assert records(out)[0]["value"] == {"num": 2, "den": 5}
    code, _, err = call("qeuler", "--n", "1", "--q", "0.5", "--u", "1/3", "--route", "exact")
    assert code == EXIT_USAGE and "rational" in err


def test_zeta_trivial():
    code, out, _ = call("zeta", "--s", "0", "--q", "0.5", "--u", "0.5", "--w", "1",
                        "--weights", "1", "--dampings", "1", "--tol", "1e-12", "--json")
    assert code == EXIT_OK
    rec = records(out)[0]
    assert abs(rec["value"]["re"] - 2.0) <= 1e-12
    assert rec["route"] == "series" and rec["terms"] > 0


def test_zeta_complex_token():
    code, out, _ = call("zeta", "--s", "2+1j", "-1.5", *P, "--json")
    assert code == EXIT_OK
    assert [r["s"] for r in records(out)] == ["(2+1j)", "-1.5"]


def test_negint_check():
    code, out, _ = call("negint", "--n", "0", "1", "2", *P, "--check", "--json")
    recs = records(out)
    assert code == EXIT_OK and len(recs) == 6
    for a, b in zip(recs[:3], recs[3:]):
        assert abs(a["value"]["re"] - b["value"]["re"]) < 1e-10


def test_barnes():
    code, out, _ = call("barnes", "--s", "0", "-1", "--u", "2", "--w", "1", "--a", "1", "--json")
    assert code == EXIT_OK
    assert [round(r["value"]["re"], 10) for r in records(out)] == [2.0, 4.0]
    code, out, _ = call("barnes", "--kind", "bernoulli", "--n-max", "4", "--a", "1", "--csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["n", "re", "im", "error_bound"]
    assert [r[1] for r in rows[1:]] == ["1", "-1/2", "1/6", "0", "-1/30"]
    code, _, err = call("barnes", "--s", "1")
    assert code == EXIT_USAGE


def test_mellin():
    code, out, _ = call("mellin", "--s", "2", *P, "--json")
    assert code == EXIT_OK
    quad, series = records(out)
    assert quad["route"] == "quadrature" and series["route"] == "series"
    assert abs(quad["value"]["re"] - series["value"]["re"]) < 1e-6


def test_table_csv_default():
    code, out, _ = call("table", "--n-max", "4", *P)
    assert code == EXIT_OK
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["n", "re", "im", "error_bound"]
    assert [r[0] for r in rows[1:]] == ["0", "1", "2", "3", "4"]
    # 17 significant digits
    assert len(rows[2][1].replace(".", "").lstrip("0")) == 17


def test_human_table():
    code, out, _ = call("qeuler", "--n", "2", *P)
    lines = out.splitlines()
    assert code == EXIT_OK and lines[0].split()[:2] == ["point", "re"]
    assert lines[1].startswith("n=2")


def test_json_round_trip():
    code, out, _ = call("zeta", "--s", "1.5", *P, "--json")
    rec = records(out)[0]
    assert json.loads(json.dumps(rec)) == rec


def test_domain_error_exit():
    code, _, err = call("zeta", "--s", "1", "--q", "2", "--u", "0.5")
    assert code == EXIT_DOMAIN and "q=" in err
    code, _, err = call("zeta", "--s", "1", "--q", "0.5", "--u", "0.5", "--w", "0")
    assert code == EXIT_DOMAIN and "w" in err


def test_usage_errors():
    assert call()[0] == EXIT_USAGE
    assert call("zeta", "--s", "1")[0] == EXIT_USAGE
    assert call("qeuler", "--n", "x", "--q", "0.5", "--u", "0.5")[0] == EXIT_USAGE
    assert call("verify", "--suite", "nope")[0] == EXIT_USAGE
    assert call("qeuler", "--help")[0] == EXIT_OK


def test_config_file(tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# defaults\ntol = 1e-6\nn_max = 2\n")
    code, out, _ = call("table", *P, "--config", str(cfg), "--route", "series", "--json")
    recs = records(out)
    assert code == EXIT_OK and len(recs) == 3
    assert all(r["error_bound"] <= 1e-6 for r in recs)
    # flags override the file
    code, out, _ = call("table", *P, "--config", str(cfg), "--n-max", "1", "--json")
    assert len(records(out)) == 2
    cfg.write_text("bogus = 1\n")
    assert call("table", *P, "--config", str(cfg))[0] == EXIT_USAGE
    assert call("table", *P, "--config", str(tmp_path / "missing"))[0] == EXIT_USAGE


def test_max_terms_config(tmp_path):
    cfg = tmp_path / "cap.cfg"
    cfg.write_text("max_terms = 5\n")
    code, _, err = call("zeta", "--s", "1", *P, "--config", str(cfg))
    assert code == EXIT_DOMAIN and "budget" in err


def test_verify_pass_and_fail(monkeypatch):
    code, out, _ = call("verify", "--suite", "thm4", "--samples", "50", "--seed", "7")
    assert code == EXIT_OK
    assert out.startswith("thm4      PASS") and "checks=450" in out
    monkeypatch.setitem(verify.SUITES, "thm2", lambda n, s: SuiteReport("thm2", False, 1.0, 1e-10, 1))
    code, out, _ = call("verify", "--suite", "thm2", "--json")
    assert code == EXIT_VERIFY
    assert records(out)[0]["passed"] is False


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "qchanghee", "qeuler", "--n", "0", "--q", "0.5",
                           "--u", "0.5", "--csv"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[1].startswith("0,1")
