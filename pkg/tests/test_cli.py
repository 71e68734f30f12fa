import json

import pytest

from syzygy.cli import main

KEYS = {"command", "inputs_echo", "paper_anchor", "status", "result", "certificates", "seed", "elapsed_ms"}


def run(capsys, *argv):
    code = main(list(argv))
    return code, json.loads(capsys.readouterr().out)


def test_betti_with_oracle(capsys):
    code, out = run(capsys, "betti", "R1_Rx", "--check-oracle", "--length", "4")
    assert code == 0 and KEYS <= set(out)
    assert out["result"]["betti"] == [1, 1, 1, 1, 1]
    assert out["result"]["oracle_match"] is True


def test_resolve_module_expressions(capsys):
    code, out = run(capsys, "resolve", "sum(m(R1), omega(2, R1_k))", "--length", "3")
    assert code == 0 and out["result"]["is_complex"] and out["result"]["is_minimal"]


def test_tor_range(capsys):
    code, out = run(capsys, "tor", "k(R3)", "k(R3)", "--index", "5:8")
    assert code == 0
    assert [out["result"][str(i)] for i in range(5, 9)] == [13, 21, 34, 55]


def test_classify_and_splitting(capsys):
    code, out = run(capsys, "classify-thm1", "R1", "R1_I", "R1_J", "R1_Rx")
    assert code == 0 and out["status"] == "v"
    code, out = run(capsys, "check-thm-a", "R2", "R2_Ry")
    assert code == 0 and out["status"] == "proved-yes"
    code, out = run(capsys, "split", "m(R2)", "omega(3, R2_Ry)")
    assert code == 0 and out["status"] == "proved-no"


def test_decompose_and_fiber_product(capsys):
    code, out = run(capsys, "decompose", "R4", "--maximal-ideal")
    assert code == 0 and out["status"] == "proved-indecomposable"
    code, out = run(capsys, "fiber-product", "S1", "T1", "--name", "P")
    assert code == 0 and out["certificates"]["decomposition"]


def test_locus(capsys):
    code, out = run(capsys, "locus", "singular", "R1", "--codim", "1")
    assert code == 0
    code, out = run(capsys, "locus", "ipd", "R1_Rx")
    assert code == 2


def test_input_errors_exit_two(capsys):
    assert run(capsys, "betti", "NOPE")[0] == 2
    code, out = run(capsys, "check-thm-a", "R1", "free(R1)")
    assert code == 2 and out["status"] == "input-error"
    assert "infinite projective dimension" in out["result"]["error"]
    assert run(capsys, "tor", "k(R1)", "k(R1)", "--index", "5:2")[0] == 2


def test_input_file_and_field(tmp_path, capsys):
    p = tmp_path / "doc.txt"
    # R/(x) over k[x,y]/(xy) is k[y]
    p.write_text("ring A = GF(101)[x,y] mod [x*y]\nmodule M over A = coker [[x]]\n")
    code, out = run(capsys, "depth", "M", "--input", str(p), "--field", "GF(7)")
    assert code == 0 and out["result"]["depth"] == 1


def test_seed_from_environment(monkeypatch, capsys):
    monkeypatch.setenv("SYZYGY_SEED", "4242")
    _, out = run(capsys, "depth", "R1_k")
    assert out["seed"] == 4242
    _, out = run(capsys, "depth", "R1_k", "--seed", "7")
    assert out["seed"] == 7
    monkeypatch.setenv("SYZYGY_SEED", "abc")
    assert run(capsys, "depth", "R1_k")[0] == 2


def test_figure_dir_outputs(tmp_path, capsys):
    code, out = run(capsys, "scan", "k(R3)", "k(R3)", "--range", "1:6", "--figure-dir", str(tmp_path))
    assert code == 0 and out["status"] == "pass"
    files = out["files"]
    for key in ("json", "scan_tsv", "figure"):
        assert (tmp_path / files[key].split("/")[-1]).exists()
    assert json.loads((tmp_path / "scan.json").read_text())["command"] == "scan"
    assert (tmp_path / "scan_scan.tsv").read_text().splitlines()[0] == "i\tdim"
    assert (tmp_path / "scan.png").read_bytes()[:4] == b"\x89PNG"


def test_betti_figure(tmp_path, capsys):
    code, out = run(capsys, "betti", "R2_Ry", "--figure-dir", str(tmp_path))
    assert code == 0 and (tmp_path / "betti.png").exists() and (tmp_path / "betti_betti.tsv").exists()


def test_battery_subset(capsys):
    code, out = run(capsys, "battery", "--only", "betti-r2", "1")
    assert code == 0 and out["status"] == "pass"
    assert [c["id"] for c in out["result"]["checks"]] == ["betti-r2"]


def test_battery_perturbation_fails(capsys):
    code, out = run(capsys, "battery", "--only", "betti-r2", "--perturb", "R2_Ry=[[y, z]]")
    assert code == 1 and out["status"] == "fail"


@pytest.mark.parametrize("argv", [["battery", "--perturb", "oops"], ["locus", "singular", "R1"]])
def test_malformed_options(capsys, argv):
    assert run(capsys, *argv)[0] == 2
