import json
import os
import subprocess
import sys

import pytest

from cli_matrix import DATA, GOLDEN, SCENARIOS, run_scenario


@pytest.mark.parametrize("name,argv,expected_code,witness_name",
                         SCENARIOS, ids=[s[0] for s in SCENARIOS])
def test_golden_matrix(tmp_path, name, argv, expected_code, witness_name):
    witness_path = str(tmp_path / "witness.json") if witness_name else None
    code, stdout = run_scenario(argv, witness_path)
    assert code == expected_code
    with open(os.path.join(GOLDEN, f"{name}.json")) as handle:
        assert stdout == handle.read()
    code2, stdout2 = run_scenario(argv, witness_path)
    assert (code2, stdout2) == (code, stdout)
    if witness_name:
        with open(witness_path) as handle:
            got = handle.read()
        with open(os.path.join(GOLDEN, witness_name)) as handle:
            assert got == handle.read()


def run_cli(*argv):
    proc = subprocess.run([sys.executable, "-m", "abchoice", *argv],
                          capture_output=True, text=True)
    return proc.returncode, proc.stdout


def test_input_error_is_exit_2(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"n":2,"edges":[[0,1],[1,0]]}')
    code, out = run_cli("core", "--input", str(bad))
    assert code == 2
    payload = json.loads(out)
    assert payload["status"] == "error"
    assert "duplicate" in payload["message"]


def test_budget_inconclusive_is_exit_2():
    code, out = run_cli("oracle", "--input", f"{DATA}/c4.json",
                        "--a", "2", "--b", "1", "--budget", "5")
    assert code == 2
    payload = json.loads(out)
    assert payload["status"] == "inconclusive"
    assert payload["enumerated"] == 5


def test_budget_env_var_is_honored():
    env = dict(os.environ, ABCHOICE_BUDGET="5")
    proc = subprocess.run(
        [sys.executable, "-m", "abchoice", "oracle", "--input", f"{DATA}/c4.json",
         "--a", "2", "--b", "1"],
        capture_output=True, text=True, env=env)
    assert proc.returncode == 2
    assert json.loads(proc.stdout)["budget"] == 5


def test_missing_seed_is_exit_2():
    code, out = run_cli("mc", "--mode", "multipartite", "--parts", "2", "2",
                        "--k", "1", "--lists", f"{DATA}/c4_lists2.json")
    assert code == 2
    assert "seed" in json.loads(out)["message"]


def test_out_file_and_dot(tmp_path):
    out = tmp_path / "g.json"
    dot = tmp_path / "g.dot"
    code, stdout = run_cli("gen", "--family", "theta", "--params", "2", "2", "4",
                           "--out", str(out), "--dot", str(dot))
    assert code == 0 and stdout == ""
    payload = json.loads(out.read_text())
    assert payload["n"] == 7 and len(payload["edges"]) == 8
    assert dot.read_text().startswith("graph G {")


def test_dimacs_input(tmp_path):
    col = tmp_path / "g.col"
    col.write_text("p edge 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n")
    code, out = run_cli("classify2", "--input", str(col))
    assert code == 0
    assert json.loads(out)["two_choosable"] is True


def test_gen_gadget_amplifier():
    code, out = run_cli("gen", "--gadget", "amplifier", "--input", f"{DATA}/c4.json")
    assert code == 0
    payload = json.loads(out)
    assert payload["graph"]["n"] == 4 * 5 + 1
    assert payload["labels"]["20"] == ["apex"]


def test_gen_cone_of_family():
    code, out = run_cli("gen", "--family", "cone-of", "--inner-family", "cycle",
                        "--params", "4")
    assert code == 0
    assert json.loads(out)["n"] == 5


def test_halve_success_and_failure(tmp_path):
    code, out = run_cli("halve", "--input", f"{DATA}/c4.json",
                        "--lists", f"{DATA}/c4_lists2.json", "--m", "1", "--k", "3")
    assert code == 0
    coloring = json.loads(out)["coloring"]
    lists = json.loads(open(f"{DATA}/c4_lists2.json").read())["lists"]
    for v, c in coloring.items():
        assert c in lists[v]

    bad = tmp_path / "bad_lists.json"
    bad.write_text(json.dumps({"lists": {
        "0": [1, 2], "1": [1, 3], "2": [2, 3],
        "3": [1, 2], "4": [1, 3], "5": [2, 3]}}))
    code, out = run_cli("halve", "--input", f"{DATA}/k33.json",
                        "--lists", str(bad), "--m", "1", "--k", "1")
    assert code == 1
    assert json.loads(out)["status"] == "failure"


def test_partition_command():
    code, out = run_cli("partition", "--family-file", f"{DATA}/fam4.json",
                        "--k", "2", "--m", "2")
    assert code == 0
    groups = json.loads(out)["groups"]
    assert len(groups) == 2
    chosen = [set(c) for g in groups for c in g.values()]
    assert all(len(c) == 2 for c in chosen)


def test_strong_check_refutation():
    code, out = run_cli("strong", "--mode", "check", "--input", f"{DATA}/c4.json",
                        "--k", "2")
    assert code == 1
    payload = json.loads(out)
    assert payload["verdict"] == "no"
    assert "witness_blocks" in payload


def test_strong_lift(tmp_path):
    blocks = tmp_path / "blocks.json"
    blocks.write_text('{"blocks":[[0,1],[2,3]],"k":2}\n')
    code, out = run_cli("strong", "--mode", "lift", "--input", f"{DATA}/path6.json",
                        "--k", "2", "--blocks", str(blocks))
    assert code == 0
    assert json.loads(out)["status"] == "ok"


def test_bounds_graph_route():
    code, out = run_cli("bounds", "--input", f"{DATA}/c5.json", "--k", "1")
    assert code == 0
    payload = json.loads(out)
    assert payload["r"] == 3  # chromatic number of an odd cycle


def test_oracle_jobs_flag():
    code, out = run_cli("oracle", "--input", f"{DATA}/c5.json",
                        "--a", "2", "--b", "1", "--jobs", "2")
    assert code == 1
    assert json.loads(out)["verdict"] == "no"


def test_oracle_f_choosable_sizes(tmp_path):
    sizes = tmp_path / "sizes.json"
    sizes.write_text('{"sizes":{"0":1,"1":2}}\n')
    k2 = tmp_path / "k2.json"
    k2.write_text('{"n":2,"edges":[[0,1]]}\n')
    code, out = run_cli("oracle", "--input", str(k2), "--sizes", str(sizes))
    assert code == 0
    assert json.loads(out)["verdict"] == "yes"
