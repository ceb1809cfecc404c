import json
import subprocess
import sys

import pytest

from rsemi import io
from rsemi.cli import main
from rsemi.fixtures import c2


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_c2(capsys, fixtures_dir):
    code, out, _ = run(capsys, "verify", fixtures_dir / "c2.alg")
    assert code == 0
    assert "[PASS] assoc" in out


def test_classify_b2_reports_witness(capsys, fixtures_dir):
    code, out, _ = run(capsys, "classify", fixtures_dir / "b2.alg")
    assert code == 0
    assert "proper: false" in out
    assert "witness proper: (" in out


def test_quotient_pipeline(capsys, fixtures_dir, tmp_path):
    report = tmp_path / "r.json"
    code, out, _ = run(capsys, "quotient", "--algebra", fixtures_dir / "c2.alg", "--generators", "b",
                       "--bound", "2", "--json", report)
    assert code == 0
    assert "[PASS] embed:injective" in out
    data = json.loads(report.read_text())
    assert data["ok"] and data["command"] == "quotient"
    assert all(c["bound"] for r in data["reports"] for c in r["checks"])


def test_math_failure_exits_1_with_witness(capsys, tmp_path):
    d = io.algebra_to_dict(c2())
    d["star"] = [d["star"][1], d["star"][0]]
    path = tmp_path / "bad.alg"
    path.write_text(json.dumps(d))
    code, out, _ = run(capsys, "verify", path)
    assert code == 1
    assert "[FAIL] xx*=x" in out and "witness=" in out


def test_rejected_precondition_exits_1(capsys, fixtures_dir):
    code, _, err = run(capsys, "globalize", fixtures_dir / "not-strong.act")
    assert code == 1
    assert "witness: (g,g,x)" in err


def test_malformed_input_exits_2(capsys, tmp_path):
    path = tmp_path / "broken.alg"
    path.write_text('{"elements": ["x"], "mul": [[0]')
    code, _, err = run(capsys, "verify", path)
    assert code == 2 and "broken.alg:1:" in err


@pytest.mark.parametrize("argv", [["nonsense"], ["verify"], ["verify", "x.alg", "--frobnicate"]])
def test_usage_errors_exit_2(argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_construct_and_reverify(capsys, fixtures_dir, tmp_path):
    out_path = tmp_path / "m.alg"
    code, _, _ = run(capsys, "construct", "m-product", fixtures_dir / "strong-not-pda.act", "--output", out_path)
    assert code == 0
    code, out, _ = run(capsys, "classify", out_path)
    assert code == 0 and "extra proper: true" in out and "ultra proper: false" in out


def test_construct_ymt(capsys, fixtures_dir):
    code, out, _ = run(capsys, "construct", "ymt", fixtures_dir / "z2-chain.dact")
    assert code == 0 and "[PASS] ymt:equals-m-product" in out


def test_w_product_of_partial_action_fails(capsys, fixtures_dir):
    code, _, err = run(capsys, "construct", "w-product", fixtures_dir / "strong-not-pda.act")
    assert code == 1 and "total" in err


def test_globalize_free_action_echoes_bound(capsys, fixtures_dir):
    code, out, _ = run(capsys, "globalize", fixtures_dir / "free-a.act", "--bound", "2")
    assert code == 0
    assert "|word|<=2" in out and "[PASS] X:meet" in out


def test_cover_and_kappa(capsys, fixtures_dir):
    code, out, _ = run(capsys, "cover", "--algebra", fixtures_dir / "c2xz3.alg", "--generators", "g=(1,g)",
                       "b=(b,1)")
    assert code == 0 and "minimal word bound: 2" in out
    code, out, _ = run(capsys, "kappa", "--algebra", fixtures_dir / "chain3.alg", "--generators", "0", "1",
                       "--bound", "2")
    assert code == 0 and "[PASS] kappa:kernel" in out


def test_unknown_generator_is_malformed(capsys, fixtures_dir):
    code, _, err = run(capsys, "cover", "--algebra", fixtures_dir / "c2.alg", "--generators", "q")
    assert code == 2 and "not an element" in err


def test_free_model(capsys, tmp_path):
    path = tmp_path / "fm.json"
    code, out, _ = run(capsys, "free-model", "--alphabet", "a", "--ideal-size", "3", "--word-bound", "2",
                       "--output", path)
    assert code == 0 and "[PASS] free:PDA" in out
    data = json.loads(path.read_text())
    assert data["kind"] == "free-model" and data["ideal_size"] == 3 and ["a", "{1,A}", "{1,a}"] in data["act"]


def test_free_model_insufficient_bound(capsys):
    code, _, err = run(capsys, "free-model", "--ideal-size", "2", "--word-bound", "3")
    assert code == 1 and "ideal size" in err


def test_reports_are_deterministic(capsys, fixtures_dir):
    first = run(capsys, "kappa", "--algebra", fixtures_dir / "c2.alg", "--generators", "b", "--bound", "2")
    second = run(capsys, "kappa", "--algebra", fixtures_dir / "c2.alg", "--generators", "b", "--bound", "2")
    assert first == second


def test_module_entry_point(fixtures_dir):
    proc = subprocess.run([sys.executable, "-m", "rsemi", "verify", str(fixtures_dir / "chain3.alg")],
                          capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
