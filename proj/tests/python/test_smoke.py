import json
import os
import subprocess
from fractions import Fraction

import pytest

import k3gm


def test_suite_names():
    assert "lie" in k3gm.suites()
    assert "factorization" in k3gm.suites()


def test_model_params():
    p = k3gm.model_params("e7")
    assert p["d_N"] == 64
    assert p["N"] == 2
    assert Fraction(p["mu"]) * Fraction(p["nu"]) ** 2 == 64


def test_period_oracle():
    x0 = k3gm.periods("e7", K=1, which="X0")
    assert x0 == {"0,0": "1", "1,0": "12"}
    full = k3gm.series_coefficients(k3gm.periods("e6", K=3)["X0"])
    assert full[(2, 1)] == 180
    assert full[(3, 0)] == 1680


def test_form_and_j():
    a = k3gm.form("A", 3, qmax=5)
    assert a["coeffs"][:2] == ["1", "6"]
    j = k3gm.form("j", 1, qmax=4)
    assert j["pole_order"] == 1
    assert j["coeffs"][:3] == ["1", "744", "196884"]
    with pytest.raises(ValueError):
        k3gm.form("C", 2)


def test_mirror_map_leading_terms():
    mm = k3gm.mirror_map("e8", K=0)
    assert mm["q_over_z"] == [{"0,0": "1"}, {"0,0": "1"}]


def test_lie_suite_passes():
    code, report = k3gm.run("all", "lie", 2, 4)
    assert code == 0
    assert report["passed"] is True
    assert [r["model"] for r in report["reports"]] == ["E6", "E7", "E8"]


def test_printed_connection_is_reported_failing():
    code, report = k3gm.run("e6", "flatness", 2, 4)
    assert code == 1
    checks = {c["name"]: c["status"] for c in report["reports"][0]["checks"]}
    assert checks["theta1 G2 - theta2 G1 + G2 G1 - G1 G2 = 0 (picard-fuchs)"] == "pass"
    assert checks["theta1 G2 - theta2 G1 + G2 G1 - G1 G2 = 0 (printed)"] == "fail"


def test_invalid_config():
    with pytest.raises(ValueError):
        k3gm.run("e6", "lie", 1, 4)
    with pytest.raises(ValueError):
        k3gm.run("e6", "nope", 4, 8)


def test_matrix_schema():
    g = k3gm.connection("e6", "picard-fuchs")
    assert g["source"] == "picard-fuchs"
    assert set(g["G1"][0][1]) == {"num", "den"}
    q = k3gm.pairing("e7", "derived")
    assert len(q["Q"]) == 4


@pytest.mark.skipif("K3GM_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_matches_binding():
    out = subprocess.run(
        [os.environ["K3GM_CLI"], "emit", "period", "X0", "--model", "e7", "-K", "1"],
        check=True,
        capture_output=True,
        text=True,
    ).stdout
    assert json.loads(out) == k3gm.periods("e7", K=1, which="X0")
