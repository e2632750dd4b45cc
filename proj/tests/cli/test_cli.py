"""End-to-end tests for the ggt command-line tool.

The binary path comes from the GGT environment variable (set by ctest).
"""

import json
import os
import subprocess

import pytest

GGT = os.environ.get("GGT", "ggt")


def run(*args, **kwargs):
    return subprocess.run([GGT, *args], capture_output=True, text=True, **kwargs)


def test_graph_q8_snorm_json(tmp_path):
    out = tmp_path / "q8.json"
    r = run("graph", "Q8", "--graph", "snorm", "--emit", "json", "--out", str(out))
    assert r.returncode == 0
    assert r.stdout.strip() == "edges=28 components=1"
    data = json.loads(out.read_text())
    assert data["n"] == 8
    assert len(data["edges"]) == 28
    assert data["edges"] == sorted(data["edges"])


def test_graph_to_stdout_keeps_info_on_stderr():
    r = run("graph", "C1", "--graph", "pow", "--emit", "json")
    assert r.returncode == 0
    data = json.loads(r.stdout)
    assert data["edges"] == []
    assert "edges=0" in r.stderr


def test_graph_dot_engel_s3(tmp_path):
    out = tmp_path / "s3.dot"
    r = run("graph", "S3", "--graph", "engel", "--emit", "dot", "--out", str(out))
    assert r.returncode == 0
    dot = out.read_text()
    assert dot.count(" -- ") == 12


def test_graph_dnorm():
    r = run("graph", "S3", "--graph", "dnorm", "--emit", "json")
    assert r.returncode == 0
    data = json.loads(r.stdout)
    assert data["kind"] == "dnorm"


def test_info_sl23():
    r = run("info", "SL(2,3)")
    assert r.returncode == 0
    assert "order: 24" in r.stdout
    assert "simple: no" in r.stdout
    assert "sylow 2: order 8, abelian=no, cyclic=no, dedekind=yes" in r.stdout


def test_witness_none_for_d4():
    r = run("witness", "D4")
    assert r.returncode == 0
    assert r.stdout.strip() == "none"


def test_witness_snnc_labels():
    r = run("witness", "SNNC(2,2,1)")
    assert r.returncode == 0
    assert "(a, ab)" in r.stdout


def test_catalog_lists_builtins():
    r = run("catalog")
    assert r.returncode == 0
    lines = r.stdout.strip().splitlines()
    assert len(lines) >= 40
    assert any(line.startswith("Q8 ") for line in lines)
    assert any("order=27" in line for line in lines)


def test_verify_thm2_builtin(tmp_path):
    out = tmp_path / "report.json"
    r = run("verify", "--checks", "thm2", "--out", str(out))
    assert r.returncode == 0
    report = json.loads(out.read_text())
    assert report["pass"] is True
    sl = [e for e in report["results"] if e["group"] == "SL(2,3)"]
    assert len(sl) == 1
    assert sl[0]["pass"] is True
    assert sl[0]["witness"]["snnc_subgroup"]["order"] == 8


def test_verify_file_catalog_and_determinism(tmp_path):
    catalog = tmp_path / "catalog.json"
    catalog.write_text(json.dumps(["S3", "Q8", "SL(2,3)", "D4", "SNNC(3,1,1)"]))
    reports = []
    for threads in ("1", "3"):
        out = tmp_path / f"report_{threads}.json"
        r = run("verify", "--catalog", f"file:{catalog}", "--checks", "all",
                "--threads", threads, "--out", str(out))
        assert r.returncode == 0
        reports.append(out.read_bytes())
    assert reports[0] == reports[1]


def test_verify_failing_entry_exit_code(tmp_path):
    catalog = tmp_path / "catalog.json"
    catalog.write_text(json.dumps(["file:no_such_group.json", "S3"]))
    out = tmp_path / "report.json"
    r = run("verify", "--catalog", f"file:{catalog}", "--checks", "dedekind",
            "--out", str(out))
    assert r.returncode == 3
    report = json.loads(out.read_text())
    assert report["pass"] is False
    assert report["results"][0]["check"] == "construction"
    assert report["results"][1]["pass"] is True


def test_verify_missing_catalog_file():
    r = run("verify", "--catalog", "file:missing.json")
    assert r.returncode == 3


def test_usage_errors():
    assert run("bogus").returncode == 2
    assert run("graph").returncode == 2
    assert run("graph", "Q8", "--graph", "nope").returncode == 2
    assert run("graph", "Q8", "--emit", "nope").returncode == 2


def test_construction_errors():
    assert run("info", "SNNC(2,1,1)").returncode == 3
    assert run("info", "Zork(1)").returncode == 3
    assert run("graph", "C513", "--graph", "nilp").returncode == 3


def test_max_order_flag_and_env():
    assert run("graph", "C513", "--graph", "nilp", "--max-order", "600").returncode == 0
    env = dict(os.environ, GG_MAX_ORDER="600")
    r = subprocess.run([GGT, "graph", "C513", "--graph", "nilp"], capture_output=True,
                       text=True, env=env)
    assert r.returncode == 0


def test_group_file_loading(tmp_path):
    table = {
        "name": "K4",
        "order": 4,
        "table": [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]],
        "labels": ["e", "a", "b", "c"],
    }
    path = tmp_path / "k4.json"
    path.write_text(json.dumps(table))
    r = run("info", f"file:{path}")
    assert r.returncode == 0
    assert "order: 4" in r.stdout
    assert "abelian: yes" in r.stdout

    perm = {"name": "V", "degree": 4, "generators": ["(1 2)(3 4)", "(1 3)(2 4)"]}
    path2 = tmp_path / "v.json"
    path2.write_text(json.dumps(perm))
    r2 = run("info", f"file:{path2}")
    assert r2.returncode == 0
    assert "order: 4" in r2.stdout


def test_paranoid_flag():
    assert run("info", "C600", "--paranoid").returncode == 0
