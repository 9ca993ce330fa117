import json

import pytest

from qgt.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_dgen(capsys):
    code, out = run(capsys, "dgen", "--n", "2", "--r", "2", "--s", "1")
    assert code == 0
    assert "d_21" in out


def test_verify_lt_json(capsys):
    code, out = run(capsys, "verify-lt", "--n", "3", "--json")
    assert code == 0
    rep = json.loads(out)
    assert rep["N"] == 3
    for p in rep["pairs"]:
        assert p["match"]
        assert {"r", "s", "theorem_perm", "oracle_perm", "lt_monomial"} <= set(p)


def test_commute_json(capsys):
    code, out = run(capsys, "commute", "--n", "2", "--json")
    assert code == 0
    rep = json.loads(out)
    for p in rep["pairs"]:
        assert {"r", "s", "r2", "s2", "commutes", "millis"} <= set(p)
        assert p["commutes"]


def test_hc(capsys):
    code, out = run(capsys, "hc", "--n", "2")
    assert code == 0
    assert "match: True" in out


def test_embed_check_json(capsys):
    code, out = run(capsys, "embed-check", "--n", "2", "--json")
    assert code == 0
    rep = json.loads(out)
    assert all(r["residue_is_zero"] for r in rep["relations"])
    assert all(r["invariant"] for r in rep["invariance"])


def test_invariance(capsys):
    code, out = run(capsys, "invariance", "--n", "2", "--bound", "5", "--seed", "1")
    assert code == 0


def test_maxcomm_cert(capsys):
    code, out = run(capsys, "maxcomm-cert", "--bound", "1")
    assert code == 0
    assert "equal: True" in out


def test_gl2_fiber_sampled(capsys):
    code, out = run(capsys, "gl2-fiber", "--bound", "3", "--seed", "2")
    assert code == 0


def test_gl2_fiber_explicit_character(capsys):
    char = json.dumps({"g11": "q^2", "g21": "q^2+q^4", "g22": "q^6"})
    code, out = run(capsys, "gl2-fiber", "--char", char, "--json")
    assert code == 0
    rep = json.loads(out)
    assert rep["fibers"][0]["count"] == 2


def test_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["lt", "--n", "2", "--r", "3", "--s", "1"])
    assert exc.value.code == 2


def test_out_file(capsys, tmp_path):
    target = tmp_path / "report.json"
    code, _ = run(capsys, "verify-lt", "--n", "2", "--json", "--out", str(target))
    assert code == 0
    assert json.loads(target.read_text())["N"] == 2
