import json
import shutil
import subprocess

import pytest

from kmweights.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_roots_named(capsys):
    code, out = run(capsys, "roots", "--type", "A2", "--height", "3")
    doc = json.loads(out)
    assert code == 0
    assert [r["root"] for r in doc["roots"]] == [[0, 1], [1, 0], [1, 1]]
    assert doc["manifest"]["elapsed_seconds"] is None
    assert doc["manifest"]["input_digest"].startswith("sha256:")


def test_roots_from_file_jsonl(tmp_path, capsys):
    f = tmp_path / "aff.json"
    f.write_text(json.dumps({"name": "affine", "matrix": [[2, -2], [-2, 2]]}))
    code, out = run(capsys, "roots", "--gcm", str(f), "--height", "4", "--format", "jsonl")
    lines = [json.loads(x) for x in out.splitlines()]
    assert code == 0
    assert "manifest" in lines[0]
    assert len(lines) == 7
    assert {tuple(r["root"]) for r in lines[1:] if not r["real"]} == {(1, 1), (2, 2)}


def test_roots_non_symmetrizable_exits_2(tmp_path, capsys):
    f = tmp_path / "tri.json"
    f.write_text(json.dumps({"matrix": [[2, -1, -1], [-2, 2, -1], [-1, -3, 2]]}))
    code, out = run(capsys, "roots", "--gcm", str(f), "--height", "3")
    assert code == 2
    assert json.loads(out)["error"]


def test_digest_is_stable(capsys):
    _, a = run(capsys, "roots", "--type", "B2", "--height", "4")
    _, b = run(capsys, "roots", "--type", "B2", "--height", "4")
    assert json.loads(a)["manifest"] == json.loads(b)["manifest"]


def test_weights_all_routes(capsys):
    code, out = run(capsys, "weights", "--type", "A2", "--hw", "1,1", "--simple",
                    "--cutoff", "10", "--method", "all")
    doc = json.loads(out)
    assert code == 0
    assert doc["agreement"] is True
    assert doc["routes"] == ["slice", "orbit", "hull", "weylkac"]
    assert len(doc["offsets"]) == 7


def test_weights_text_format(capsys):
    code, out = run(capsys, "weights", "--type", "A2", "--hw", "1,1", "--simple",
                    "--method", "all", "--format", "text")
    assert code == 0
    assert "agreement: true" in out


def test_weights_undetermined(capsys):
    code, out = run(capsys, "weights", "--type", "A1xA1", "--hw", "0,0",
                    "--integrability", "", "--format", "text")
    assert code == 0
    assert out.startswith("undetermined: diagram not complete")


def test_weights_verma_quadrant(capsys):
    code, out = run(capsys, "weights", "--type", "A1", "--hw", "1/2", "--simple",
                    "--cutoff", "4")
    assert code == 0
    assert json.loads(out)["offsets"] == [[k] for k in range(5)]


def test_weights_precondition_errors(capsys):
    code, out = run(capsys, "weights", "--type", "A2", "--hw", "1/2,1",
                    "--integrability", "0")
    assert code == 2
    assert json.loads(out)["error"] == "IntegrabilityTooLarge"


def test_usage_errors_exit_1(capsys):
    assert main(["weights", "--type", "A2", "--hw", "1", "--simple"]) == 1
    with pytest.raises(SystemExit) as info:
        main(["roots"])
    assert info.value.code == 1
    assert main(["roots", "--type", "nope"]) == 1


def test_check_denominator(capsys):
    code, out = run(capsys, "check", "denominator", "--type", "A2")
    assert code == 0 and json.loads(out)["verified"] is True


def test_check_rank2(capsys):
    code, out = run(capsys, "check", "rank2-imaginary", "--gcm", "affineA1",
                    "--cutoff", "5", "--length", "14", "--format", "text")
    assert code == 0
    assert out.splitlines()[0] == "rank2-imaginary: pass"
    assert "stable@" in out


def test_check_rank2_short_sweep_mismatch(capsys):
    code, out = run(capsys, "check", "rank2-imaginary", "--gcm", "affineA1",
                    "--cutoff", "6", "--length", "2")
    assert code == 3
    assert json.loads(out)["verified"] is False


def test_check_bggl(capsys):
    code, out = run(capsys, "check", "bggl", "--type", "B2", "--J", "all",
                    "--J'", "0", "--cutoff", "6")
    assert code == 0
    assert json.loads(out)["differences"] == []


def test_check_atiyah_bott_and_hull(capsys):
    code, _ = run(capsys, "check", "atiyah-bott", "--type", "affineA1", "--hw", "1,0",
                  "--J", "0", "--cutoff", "5")
    assert code == 0
    code, out = run(capsys, "check", "hull-stabilizer", "--type", "A2", "--J", "0")
    assert code == 0
    assert json.loads(out)["generators"] == [0]


def test_check_requires_finite_type(capsys):
    code, out = run(capsys, "check", "denominator", "--type", "affineA1")
    assert code == 2
    assert json.loads(out)["error"] == "RequiresFiniteType"


@pytest.mark.skipif(shutil.which("kmweights") is None, reason="console script not installed")
def test_console_script():
    res = subprocess.run(["kmweights", "roots", "--type", "A1", "--height", "5"],
                         capture_output=True, text=True)
    assert res.returncode == 0
    assert json.loads(res.stdout)["roots"] == [{"root": [1], "mult": 1, "real": True}]
