import json
import subprocess
import sys

import pytest

from markov_gfan.cli import main
from markov_gfan.gfan import expected_cone_count


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_verify_small_passes(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "signs,invariants", "--depth", "4")
    report = json.loads(out)
    assert code == 0 and report["ok"]
    assert sorted(report["suites"]) == ["invariants", "signs"]


def test_verify_rejects_bad_inputs(capsys):
    code, _, err = run(capsys, "verify", "--matrix", "custom:2,2,2,2,3,3,+")
    assert code == 2 and "invalid custom matrix" in err
    code, _, err = run(capsys, "verify", "--suite", "nope")
    assert code == 2 and "unknown suite" in err
    code, _, _ = run(capsys, "verify", "--depth", "-1")
    assert code == 2


def test_argparse_errors_exit_two():
    with pytest.raises(SystemExit) as exc:
        main(["enum", "--format", "xml"])
    assert exc.value.code == 2


def test_enum_json(capsys):
    code, out, _ = run(capsys, "enum", "--depth", "3")
    snap = json.loads(out)
    assert code == 0
    assert len(snap["cones"]) == expected_cone_count(3)
    assert snap["cones"][0] == {"walk": "[]", "gens": [[1, 0, 0], [0, 1, 0], [0, 0, 1]]}


def test_enum_tsv_integer2(capsys):
    code, out, _ = run(capsys, "enum", "--depth", "2", "--format", "tsv", "--matrix", "integer2:-")
    lines = out.splitlines()
    assert code == 0 and lines[0].startswith("kind\t")
    assert sum(line.startswith("cone\t") for line in lines) == expected_cone_count(2)


def test_param_tables(capsys):
    code, out, _ = run(capsys, "param", "--subtree", "1", "--bound", "4")
    rows = out.splitlines()
    assert code == 0 and rows[1] == "1\t1\t0\t0,0,1\tinitial"
    code, out, _ = run(capsys, "param", "--side", "c", "--bound", "2", "--format", "json")
    data = json.loads(out)
    assert {"subtree", "eps", "a", "b", "vector"} == set(data[0])


def test_locate(capsys):
    code, out, _ = run(capsys, "locate", "1,-1,1", "--depth", "3")
    assert code == 0
    assert json.loads(out) == {"result": "OnComplementRay", "subtree": 1, "a": "1", "b": "0"}
    code, _, err = run(capsys, "locate", "1,2")
    assert code == 2 and "three coordinates" in err
    code, _, _ = run(capsys, "locate", "0,0,-1")
    assert code == 2


def test_render_to_file_is_deterministic(tmp_path, capsys):
    first, second = tmp_path / "a.svg", tmp_path / "b.svg"
    assert run(capsys, "render", "--depth", "4", "--out", str(first))[0] == 0
    assert run(capsys, "render", "--depth", "4", "--out", str(second))[0] == 0
    assert first.read_bytes() == second.read_bytes()


def test_unwritable_output(tmp_path, capsys):
    target = tmp_path / "missing" / "x.json"
    code, _, err = run(capsys, "enum", "--depth", "1", "--out", str(target))
    assert code == 2 and str(target) in err


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "markov_gfan", "locate", "0,0,1", "--depth", "2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["result"] == "InCone"
