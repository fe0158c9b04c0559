"""End-to-end checks of the eqdeg command-line tool."""

import json
import os
import pathlib
import subprocess

import jsonschema
import pytest

BIN = os.environ["EQDEG_BIN"]
SCHEMAS = pathlib.Path(os.environ["EQDEG_SCHEMAS"])


@pytest.fixture()
def cache(tmp_path, monkeypatch):
    monkeypatch.setenv("EQDEG_CACHE_DIR", str(tmp_path))
    return tmp_path


def run(*args):
    return subprocess.run([BIN, *args], capture_output=True, text=True, timeout=600)


def run_json(schema, *args):
    proc = run(*args, "--format", "json")
    assert proc.returncode == 0, proc.stderr
    doc = json.loads(proc.stdout)
    jsonschema.validate(doc, json.loads((SCHEMAS / f"{schema}.schema.json").read_text()))
    return doc, proc.stdout


def test_spectrum_json(cache):
    doc, _ = run_json("spectrum", "spectrum", "--kmax", "3", "--mmax", "3", "--g", "1", "--gtilde", "2")
    lines = doc["lines"]
    assert len(lines) == 1 + 4 * 3
    assert (lines[0]["k"], lines[0]["m"], lines[0]["s"]) == (0, 0, 0.0)
    s11 = next(l["s"] for l in lines if (l["k"], l["m"]) == (1, 1))
    assert abs(s11 - 2.081575977818101) < 1e-9


def test_usage_and_domain_errors(cache):
    assert run("spectrum", "--g", "1").returncode == 2
    assert run("spectrum", "--g", "1", "--gtilde", "2", "--kmax", "40").returncode == 2
    assert run("bifurcate", "--g", "1", "--gtilde", "2").returncode == 2
    assert run("bifurcate", "--g", "1", "--gtilde", "2", "--k", "1").returncode == 2
    assert run().returncode == 2
    proc = run("spectrum", "--g", "2", "--gtilde", "1")
    assert proc.returncode == 1
    assert "immiscib" in proc.stderr
    assert run("basic-degree", "--group", "S4", "--rep", "W9").returncode == 2
    assert run("subgroups", "--group", "Q8").returncode == 2
    assert run("--help").returncode == 0


def test_basic_degrees(cache):
    proc = run("basic-degree", "--group", "S4", "--rep", "W4")
    assert proc.returncode == 0
    assert proc.stdout.strip().endswith("= (S4) - 2(D3) - (D2) + 3(D1) - (Z1)")
    doc, _ = run_json("basic-degree", "basic-degree", "--group", "S4p", "--rep", "W3m")
    assert doc["expression"] == "(S4p) - (D4z) - (D3z) - (D2d) + 2(D1z) + (Z2-) - (Z1)"
    doc, _ = run_json("basic-degree", "basic-degree", "--group", "S4pxS4", "--rep", "W3mxW4")
    assert doc["dim"] == 9
    assert len(doc["terms"]) == 84
    assert doc["terms"][0] == {"class": "S4p x S4", "order": 1152, "coeff": 1}


def test_subgroups_s4p(cache):
    doc, _ = run_json("subgroups", "subgroups", "--group", "S4p")
    rows = {c["label"]: c for c in doc["classes"]}
    assert len(rows) == 33
    assert rows["D4z"]["normalizer"] == "D4p" and rows["D4z"]["weyl_order"] == 2
    assert rows["V4p"]["normalizer"] == "S4p" and rows["V4p"]["weyl_order"] == 6


def test_bifurcate_first_index(cache):
    doc, _ = run_json("bifurcation", "bifurcate", "--g", "1", "--gtilde", "2", "--k", "1", "--m", "1")
    (report,) = doc["reports"]
    assert report["kernel_dim"] == 9
    assert {b["orbit_type"] for b in report["branches"]} == {
        "D4p^{Z2-} x_{D4} D4", "O(2)- x D3", "O(2)p^{D2d} x^{D1} D2",
        "O(2)p^{O(2)-} x^{D2} D4", "S4- x_{S4} S4", "D3 x_{D3} D3"}


def test_bifurcate_trivial_index(cache):
    proc = run("bifurcate", "--g", "1", "--gtilde", "2", "--k", "0", "--m", "0")
    assert proc.returncode == 1
    assert "no bifurcation at trivial index" in proc.stderr


def test_scan(cache):
    doc, _ = run_json("bifurcation", "bifurcate", "--g", "1", "--gtilde", "2", "--scan", "80")
    assert [(r["k"], r["m"]) for r in doc["reports"]] == [(1, 1), (2, 1), (0, 1), (3, 1)]
    doc, _ = run_json("bifurcation", "bifurcate", "--g", "1", "--gtilde", "2", "--scan", "10")
    assert doc["reports"] == []
    assert run("bifurcate", "--g", "1", "--gtilde", "2", "--scan", "1e7").returncode == 1


def test_psi_table(cache):
    doc, _ = run_json("psi-table", "psi-table")
    assert len(doc["degrees"]) == 2


def test_cache_is_bit_exact(cache):
    args = ("bifurcate", "--g", "1", "--gtilde", "2", "--scan", "80")
    _, cold = run_json("bifurcation", *args)
    assert (cache / "S4pxS4.lattice").exists()
    _, warm = run_json("bifurcation", *args)
    _, nocache = run_json("bifurcation", "--no-cache", *args)
    _, direct = run_json("bifurcation", "--no-cache", "--direct", *args)
    assert cold == warm == nocache == direct
    other = cache / "explicit"
    _, explicit = run_json("bifurcation", "--cache-dir", str(other), *args)
    assert explicit == cold
    assert (other / "S4pxS4.lattice").exists()
