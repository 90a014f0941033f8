import json

import pytest

from dplattice.cli import main
from dplattice import registry


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_enumerate_counts(capsys):
    code, out = run(capsys, "enumerate", "--rank", "7", "--kind", "pre1")
    assert code == 0
    doc = json.loads(out)
    assert len(doc["data"]) == 56
    assert doc["meta"]["tool"] == "dplattice"

    code, out = run(capsys, "enumerate", "--rank", "8", "--kind", "roots")
    assert len(json.loads(out)["data"]) == 240


def test_enumerate_deterministic(capsys):
    _, a = run(capsys, "enumerate", "--rank", "7", "--kind", "roots")
    _, b = run(capsys, "enumerate", "--rank", "7", "--kind", "roots")
    assert a == b


def test_tables_output(tmp_path, capsys):
    path = tmp_path / "tables.csv"
    code, _ = run(capsys, "tables", "--out", str(path))
    assert code == 0
    lines = path.read_text().splitlines()
    assert lines[0].startswith("# tool=dplattice")
    assert lines[1] == "left_name,right_name,value"
    assert len(lines) == 2 + 3136 + 7056 + 4704


def test_classify_file(tmp_path, capsys):
    cfg = registry.representative("2A3")
    path = tmp_path / "cfg.json"
    path.write_text(json.dumps(cfg.to_json_dict()))
    code, out = run(capsys, "classify", "--input", str(path), "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["data"]["type"] == "2A3"
    assert doc["data"]["valid"]


def test_classify_invalid(tmp_path, capsys):
    cfg = registry.representative("2A1")
    data = cfg.to_json_dict()
    data["orbits"] = [[0]]
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(data))
    code, out = run(capsys, "classify", "--input", str(path))
    assert code == 1
    assert "violation" in out


def test_derive_text(capsys):
    code, out = run(capsys, "derive", "--type", "A1+D6")
    assert code == 0
    assert "degree 3" in out and "D5" in out


def test_derive_minimal_cases(capsys):
    _, out = run(capsys, "derive", "--type", "A1")
    assert "case 1" in out
    _, out = run(capsys, "derive", "--type", "A2", "--a2-conjugate")
    assert "case 2" in out
    _, out = run(
        capsys, "derive", "--type", "4A1", "--variant", "no-triple-curve",
        "--orbits", "0,1,2,3",
    )
    assert "case 3" in out


def test_derive_orbit_split(capsys):
    _, out = run(
        capsys, "derive", "--type", "4A1", "--variant", "no-triple-curve",
        "--orbits", "0,1|2,3",
    )
    assert "degree 4" in out and "2A1" in out


def test_derive_dot(tmp_path, capsys):
    dot = tmp_path / "g.dot"
    code, _ = run(capsys, "derive", "--type", "2A3", "--dot", str(dot))
    assert code == 0
    text = dot.read_text()
    assert "shape=circle" in text and "shape=point" in text


def test_derive_json_roundtrip(tmp_path, capsys):
    out_path = tmp_path / "d.json"
    run(capsys, "derive", "--type", "E7", "--json", str(out_path))
    doc = json.loads(out_path.read_text())
    assert doc["data"]["target_degree"] == 3
    assert doc["data"]["target_type"] == "E6"
    assert len(doc["data"]["curves"]) == 1


def test_contract(capsys, cat7):
    curves = json.dumps(
        [list(cat7.named("B13").coeffs), list(cat7.named("C24").coeffs)]
    )
    code, out = run(capsys, "contract", "--rank", "7", "--curves", curves,
                    "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["data"]["target_degree"] == 4


def test_arith_bounds(capsys):
    code, out = run(capsys, "arith", "bounds", "--case", "1", "--q", "9")
    assert code == 0
    assert "off_ramification: 14" in out


def test_arith_threshold(capsys):
    for case, expect in ((1, "9"), (2, "8"), (3, "4")):
        code, out = run(capsys, "arith", "threshold", "--case", str(case))
        assert code == 0 and out.strip() == expect


def test_arith_table(tmp_path, capsys):
    path = tmp_path / "t.csv"
    code, _ = run(capsys, "arith", "table", "--case", "3", "--qmax", "25",
                  "--csv", str(path))
    assert code == 0
    lines = path.read_text().splitlines()
    assert lines[1] == "q,char,min_X,max_R,min_offR,required,ok"
    rows = [line.split(",") for line in lines[2:]]
    by_q = {int(r[0]): r for r in rows}
    assert by_q[3][-1] == "False"
    assert by_q[4][-1] == "True"
    assert by_q[25][-1] == "True"


def test_verify_all_skip_weyl(capsys):
    code, out = run(capsys, "verify-all", "--skip-weyl")
    assert code == 0
    assert "all checks passed" in out
    assert "FAIL" not in out.replace("FAILURES PRESENT", "")
