import io
import json
import subprocess
import sys

import pytest

from thickreps import cli, golden


def run(*argv):
    out = io.StringIO()
    code = cli.main(list(argv), out)
    return code, out.getvalue()


def run_json(*argv):
    code, text = run(*argv, "--format", "json")
    return code, json.loads(text)


def test_classify_examples():
    code, d = run_json("classify", "G", "2", "1,0", "--dense")
    row = d["rows"][0]
    assert code == 0 and row["thick"] is True and row["dense"] is False
    code, d = run_json("classify", "A", "1", "5")
    assert code == 0 and d["rows"][0]["thick"] is True
    code, d = run_json("classify", "A", "2", "1,1")
    assert d["rows"][0]["thick"] is False and d["rows"][0]["reason"] == "NotWMF"


def test_classify_formats():
    code, text = run("classify", "B", "3", "1,0,0", "--format", "tsv")
    lines = text.splitlines()
    assert code == 0 and lines[0].split("\t")[:3] == ["family", "rank", "lambda"]
    assert lines[1].split("\t")[:4] == ["B", "3", "1,0,0", "7"]
    code, text = run("classify", "B", "3", "1,0,0")
    assert code == 0 and text.splitlines()[0].startswith("family")


@pytest.mark.parametrize("argv", [
    ["classify", "A", "2", "1"],
    ["classify", "A", "2", "1,-1"],
    ["classify", "A", "2", "x,y"],
    ["classify", "H", "3", "1,0,0"],
    ["classify", "B", "1", "1"],
    ["enumerate", "--max-dim", "0"],
    ["product", "G2-1,0"],
    ["oracle", "evidence", "--rep", "sl-std", "--n", "3", "--m", "1"],
    ["oracle", "evidence", "--rep", "e8-adjoint", "--n", "3", "--m", "1", "--seed", "1"],
    ["oracle", "evidence", "--rep", "sl-std", "--n", "1", "--m", "1", "--seed", "1"],
    ["oracle", "evidence", "--rep", "sl-std", "--n", "3", "--m", "3", "--seed", "1"],
    ["oracle", "witness", "--rep", "sp-std", "--n", "2", "--seed", "1"],
    ["nonsense"],
])
def test_usage_errors(argv, capsys):
    code, text = run(*argv)
    assert code == 2
    assert text == ""


def test_intractable_exit_code():
    code, text = run("classify", "A", "1", "40", "--dense")
    assert code == 4 and text == ""


def test_enumerate_max_dim_one():
    code, d = run_json("enumerate", "--mode", "thick", "--max-dim", "1")
    assert code == 0
    assert d["rows"] and all(r["dim"] == 1 and r["reason"] == "Trivial" for r in d["rows"])


def test_enumerate_golden_small_bound():
    code, d = run_json("enumerate", "--mode", "thick", "--max-dim", "12", "--max-rank", "3", "--families", "ABCG",
                       "--golden")
    assert code == 0 and d["golden"]["match"] is True


def test_enumerate_golden_mismatch(monkeypatch):
    monkeypatch.setattr(golden, "thick_list", lambda *a, **k: [("A", 1, (0,))])
    code, d = run_json("enumerate", "--max-dim", "5", "--max-rank", "2", "--families", "A", "--golden")
    assert code == 3
    assert d["golden"]["match"] is False and d["golden"]["unexpected"]


def test_enumerate_dense_reports_not_evaluated():
    code, d = run_json("enumerate", "--mode", "dense", "--max-dim", "33", "--max-rank", "1", "--families", "A")
    assert code == 0
    assert d["not_evaluated"] == [["A", 1, [m]] for m in range(30, 33)]


def test_character_examples():
    code, d = run_json("character", "B", "2", "0,1")
    assert code == 0 and len(d["weights"]) == 4 and all(m == 1 for _, m in d["weights"])
    code, d = run_json("character", "A", "1", "3")
    assert [w for w, _ in d["weights"]] == [[3], [1], [-1], [-3]]
    code, d = run_json("character", "A", "2", "1,1")
    assert d["dim"] == 8 and dict((tuple(w), m) for w, m in d["weights"])[(0, 0)] == 2


def test_poset_and_dual():
    code, text = run("poset", "A", "1", "2")
    assert code == 0 and text.splitlines() == ["(2)", "(0)", "(-2)", "# chain: yes"]
    code, d = run_json("poset", "A", "3", "0,1,0")
    assert d["chain"] is False
    code, text = run("dual", "A", "3", "1,0,0")
    assert text.strip() == "0,0,1"


def test_product():
    code, d = run_json("product", "G2:1,0", "A1:0")
    assert code == 0 and d["rows"][0]["thick"] is True
    code, d = run_json("product", "A1:1", "A1:1")
    assert d["rows"][0]["thick"] is False


def test_oracle_examples():
    code, d = run("oracle", "witness", "--rep", "so-even", "--n", "2", "--trials", "1000", "--seed", "42")
    d = json.loads(d)
    assert code == 0 and d["verdict"] is True and d["max_volume"] < 1e-10
    for rep, n in [("sp-std", "2"), ("sl-std", "3")]:
        code, d = run("oracle", "evidence", "--rep", rep, "--n", n, "--m", "2", "--pairs", "500", "--seed", "7")
        assert code == 0 and json.loads(d)["success_fraction"] == 1.0


def test_byte_identical_output():
    argv = ["oracle", "evidence", "--rep", "g2", "--m", "3", "--pairs", "40", "--seed", "99"]
    assert run(*argv) == run(*argv)
    argv = ["enumerate", "--max-dim", "30", "--max-rank", "4", "--format", "tsv"]
    assert run(*argv) == run(*argv)


def test_cache(tmp_path, monkeypatch):
    direct = run("character", "C", "3", "0,1,0", "--format", "json")
    cached = run("character", "C", "3", "0,1,0", "--format", "json", "--cache-dir", str(tmp_path))
    files = list(tmp_path.glob("*.json"))
    assert len(files) == 1
    again = run("character", "C", "3", "0,1,0", "--format", "json", "--cache-dir", str(tmp_path))
    assert direct == cached == again
    monkeypatch.setenv(cli.CACHE_ENV, str(tmp_path / "env"))
    run("poset", "G", "2", "1,0")
    assert len(list((tmp_path / "env").glob("*.json"))) == 1
    # a corrupt entry is recomputed
    files[0].write_text("{")
    assert run("character", "C", "3", "0,1,0", "--format", "json", "--cache-dir", str(tmp_path)) == direct


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "thickreps.cli", "dual", "E", "6", "1,0,0,0,0,0"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "0,0,0,0,0,1"
