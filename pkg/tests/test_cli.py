from __future__ import annotations

import json
import subprocess
import sys


from parikhrs.cli import main
from parikhrs.presets import prs_preset, thue_preset
from parikhrs.prs import ParikhRewritingSystem
from parikhrs.thue import ThueSystem, r_class


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_count(capsys):
    assert run(capsys, "count", "abc", "baacbc", "abc") == (0, "2\n", "")
    assert run(capsys, "count", "ab", "aabab", "-")[1] == "1\n"


def test_matrix_text_and_json(capsys):
    code, out, _ = run(capsys, "matrix", "abc", "abcbac")
    assert code == 0 and out.splitlines()[0] == "/ 1 2 2 3 \\"
    code, out, _ = run(capsys, "--json", "matrix", "abc", "abcbac")
    assert json.loads(out)["matrix"][0] == [1, 2, 2, 3]


def test_global_flags_after_subcommand(capsys):
    code, out, _ = run(capsys, "matrix", "abc", "abcbac", "--json")
    assert json.loads(out)["word"] == "abcbac"


def test_equiv_exit_codes(capsys):
    assert run(capsys, "equiv", "ab", "abba", "baab")[0] == 0
    assert run(capsys, "equiv", "ab", "ab", "ba")[0] == 1


def test_audit_witness(capsys):
    code, out, _ = run(capsys, "audit", "complete", "--system", "ternary-ex0701c", "--max-len", "8")
    assert code == 1
    assert "abbcbacb / bacbabbc" in out
    code, out, _ = run(capsys, "--json", "audit", "complete", "--system", "ternary-ex0701c",
                       "--max-len", "8")
    assert json.loads(out)["witness"] == ["abbcbacb", "bacbabbc"]


def test_audit_prs_and_threads(capsys):
    code, out, _ = run(capsys, "--threads", "2", "audit", "sound", "--system", "salomaa-abc",
                       "--prs", "--max-len", "6")
    assert code == 0 and "holds" in out


def test_sound_audit_step_witness(capsys):
    code, out, _ = run(capsys, "--json", "audit", "sound", "--system", "salomaa", "--max-len", "6")
    assert code == 1
    w = json.loads(out)["witness"]
    assert (w["source"], w["result"]) == ("abcba", "bacab")


def test_dist_and_class(capsys):
    code, out, _ = run(capsys, "dist", "--system", "salomaa", "--path", "abbcacb", "baacbbc")
    assert code == 0 and out.splitlines()[0] == "3"
    assert run(capsys, "dist", "--system", "salomaa", "abc", "cba")[0] == 1
    code, out, _ = run(capsys, "--json", "class", "--system", "salomaa", "abcba")
    assert json.loads(out) == r_class(thue_preset("salomaa"), "abcba")
    assert {"abcba", "bacab", "baacb"} <= set(json.loads(out))


def test_neighbors_json_round_trip(capsys):
    code, out, _ = run(capsys, "--json", "neighbors", "--system", "salomaa", "abcba")
    steps = json.loads(out)
    assert [s["result"] for s in steps] == ["bacab"]


def test_irreducibility_commands(capsys):
    code, out, _ = run(capsys, "irr", "--prs", "salomaa-abc", "aabcbaaaccab", "baacaaabccba")
    assert code == 0 and "order 3" in out
    code, out, _ = run(capsys, "irr", "--prs", "salomaa-abc", "abbcacb", "baacbbc")
    assert code == 1 and "splitter" in out
    code, out, _ = run(capsys, "path", "--prs", "salomaa-abc", "--max-order", "2",
                       "aabcbaaaccab", "baacaaabccba")
    assert code == 1
    code, out, _ = run(capsys, "--json", "path", "--prs", "salomaa-abc", "--max-order", "2",
                       "abcbcbacab", "bacabcbcba")
    chain = json.loads(out)
    assert code == 0 and chain[0]["source"] == "abcbcbacab" and chain[-1]["target"] == "bacabcbcba"
    code, out, _ = run(capsys, "--json", "decompose", "--prs", "salomaa-abc", "abc", "abc")
    assert json.loads(out) == []


def test_derive(capsys):
    code, out, _ = run(capsys, "--json", "derive", "--prs", "binary-swap-ab", "--max-len", "6")
    data = json.loads(out)
    assert code == 0 and data["histogram"] == {"2": 31}
    assert ThueSystem.from_dict(data["system"]).alphabet.letters == "ab"


def test_suite_command_zero_budget(capsys):
    code, out, _ = run(capsys, "--json", "verify-paper", "--budget", "zero")
    assert code == 2
    assert {e["status"] for e in json.loads(out)["entries"]} == {"skipped"}


def test_invalid_input_exit_code(capsys):
    code, _, err = run(capsys, "count", "ab", "abc", "a")
    assert code == 3 and "outside alphabet" in err
    assert run(capsys, "irr", "--prs", "salomaa-abc", "ab", "ba")[0] == 3
    assert run(capsys, "dist", "--system", "no-such-preset", "a", "a")[0] == 3
    assert run(capsys, "bogus")[0] == 3
    assert run(capsys, "audit", "sound", "--system", "salomaa")[0] == 3


def test_cap_exit_code(capsys):
    code, _, err = run(capsys, "--cap", "5", "class", "--system", "salomaa", "abcabcabcabc")
    assert code == 2 and "visited more than" in err


def test_system_files(tmp_path, capsys):
    path = tmp_path / "sys.json"
    path.write_text(thue_preset("salomaa").to_json())
    code, out, _ = run(capsys, "dist", "--system", str(path), "abbcacb", "baacbbc")
    assert (code, out) == (0, "3\n")
    prs = tmp_path / "prs.json"
    prs.write_text(json.dumps(prs_preset("salomaa-abc").to_dict()))
    code, out, _ = run(capsys, "irr", "--prs", str(prs), "ac", "ca")
    assert code == 0
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(capsys, "dist", "--system", str(bad), "a", "a")[0] == 3


def test_preset_names_win_unless_from_file(tmp_path, capsys, monkeypatch):
    monkeypatch.chdir(tmp_path)
    swap = ThueSystem("abc", thue_preset("ternary-allswaps").rules)
    (tmp_path / "salomaa").write_text(swap.to_json())
    # preset: ab and ba are not related; file: a plain swap relates them
    assert run(capsys, "dist", "--system", "salomaa", "ab", "ba")[0] == 1
    code, out, _ = run(capsys, "dist", "--system", "salomaa", "--from-file", "ab", "ba")
    assert (code, out) == (0, "1\n")


def test_presets_listing_round_trips(capsys):
    code, out, _ = run(capsys, "--json", "presets")
    data = json.loads(out)
    for name, d in data["thue"].items():
        assert ThueSystem.from_dict(d) == thue_preset(name)
    for name, d in data["prs"].items():
        assert ParikhRewritingSystem.from_dict(d) == prs_preset(name)


def test_output_is_deterministic():
    argv = [sys.executable, "-m", "parikhrs", "--json", "derive", "--prs", "binary-R1R2-ab",
            "--max-len", "6", "--threads", "2"]
    first = subprocess.run(argv, capture_output=True, text=True, check=True).stdout
    second = subprocess.run(argv[:-2], capture_output=True, text=True, check=True).stdout
    assert first == second


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "parikhrs", "count", "abc", "baacbc", "abc"],
                       capture_output=True, text=True)
    assert (r.returncode, r.stdout) == (0, "2\n")
