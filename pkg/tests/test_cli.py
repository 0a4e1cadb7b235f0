import io
import json
import subprocess
import sys

import pytest
from hypothesis import given, settings, strategies as st

from startree import btree
from startree.catalog import parse_group
from startree.classifier import in_xp
from startree.cli import CliConfig, main


def run(*argv):
    out = io.StringIO()
    try:
        code = main(list(argv), out=out)
    except SystemExit as exc:
        code = exc.code
    return code, out.getvalue()


@pytest.mark.parametrize("group,p,code", [
    ("PSL(2,7)", 3, 0), ("Sp(6,3)", 13, 1), ("M12", 5, 4), ("A7", 3, 2), ("A5", 7, 2),
    ("GU(3,3)", 7, 3), ("C13", 13, 0),
])
def test_classify_exit_codes(group, p, code):
    assert run("classify", group, "--p", str(p))[0] == code


def test_classify_prints_justification():
    code, out = run("classify", "M12", "--p", "5")
    assert "Conflict" in out and "[sporadic.conflict]" in out and out.count("warning:") == 2


@pytest.mark.parametrize("argv", [["classify", "PSL(2", "--p", "3"], ["classify", "A5"],
                                  ["classify", "A5", "--p", "4"], ["frobnicate"], [],
                                  ["sweep", "--families", "bogus"],
                                  ["classify", "A5", "--p", "5", "--element-cap", "0"]])
def test_usage_errors(argv):
    assert run(*argv)[0] == 64


def test_verify_a5():
    code, out = run("verify", "A5", "--p", "5", "--json")
    d = json.loads(out)
    assert code == 0 and (d["measured"]["e"], d["measured"]["m"]) == ("2", "2")
    assert d["disagreements"] == []


def test_verify_j1_with_file():
    code, out = run("verify", "J1", "--p", "5", "--rep", "j1.json")
    assert code == 0 and "claimed InXp" in out


def test_verify_a4_p2():
    code, out = run("verify", "A4", "--p", "2", "--json")
    d = json.loads(out)
    assert code == 0 and d["measured"]["cyclic"] == "no" and d["claimed"]["status"] == "SylowNotCyclic"


def test_verify_missing_representation():
    assert run("verify", "E8(2)", "--p", "7")[0] == 66
    assert run("verify", "A5", "--p", "5", "--rep", "no_such_file.json")[0] == 66


def test_verify_order_mismatch(tmp_path):
    from startree.permgrp import symmetric
    from startree.permgrp.builders import dump_generators
    path = tmp_path / "s5.json"
    path.write_text(dump_generators(symmetric(5).generators, 5, "S5", 120))
    assert run("verify", "A5", "--p", "5", "--rep", str(path))[0] == 65


def test_verify_undecided_exit():
    assert run("verify", "SL(2,5)", "--p", "2", "--element-cap", "10")[0] == 6


def test_verify_data_dir_flag(tmp_path):
    from startree.permgrp import alternating
    from startree.permgrp.builders import dump_generators
    (tmp_path / "a5.json").write_text(dump_generators(alternating(5).generators, 5, "A5", 60))
    assert run("verify", "A5", "--p", "5", "--rep", "a5.json", "--data-dir", str(tmp_path))[0] == 0


def test_sweep_star_list_alternating():
    code, out = run("sweep", "--families", "alternating", "--n-max", "12", "--p-max", "13",
                    "--theorem1-only", "--json")
    rows = [json.loads(line) for line in out.splitlines()]
    got = {(r["group"], r["p"]) for r in rows if r["group"] != "C3"}
    assert code == 0 and got == {("A5", "3"), ("A5", "5"), ("A6", "5")}


def test_sweep_star_list_suzuki():
    code, out = run("sweep", "--families", "suzuki", "--exp-max", "2", "--p-max", "50",
                    "--theorem1-only", "--json")
    got = {(json.loads(x)["group"], json.loads(x)["p"]) for x in out.splitlines()}
    assert got == {("Sz(8)", "7"), ("Sz(8)", "13"), ("Sz(32)", "31"), ("Sz(32)", "41")}


def test_sweep_none():
    assert run("sweep", "--families", "none") == (0, "")


def test_sweep_output_file(tmp_path):
    path = tmp_path / "rows.txt"
    code, out = run("sweep", "--families", "sporadic", "--order-cap", "200000", "--output", str(path))
    lines = path.read_text().splitlines()
    assert code == 0 and out == "" and any(line.startswith("M11") for line in lines)


def test_sweep_deterministic():
    a = run("sweep", "--families", "linear,unitary", "--order-cap", "100000")
    b = run("sweep", "--families", "unitary,linear", "--order-cap", "100000")
    assert a == b and a[1]


def test_tree_so7_q3():
    code, out = run("tree", "so7", "--q", "3")
    assert code == 0 and "edges=4" in out and "exceptional=3" in out and "star=False" in out
    assert "deg=819" in out


def test_tree_symbolic():
    code, out = run("tree", "so7")
    assert code == 0 and "deg=q^2(q^4+q^2+1)" in out


def test_tree_unknown():
    assert run("tree", "nosuch")[0] == 65


def test_tree_json_round_trip():
    code, out = run("tree", "so7", "--q", "3", "--json")
    assert json.loads(out) == json.loads(json.dumps(btree.to_dict(btree.so7_fixture(3))))


def test_cli_config_validation():
    with pytest.raises(ValueError):
        CliConfig(element_cap=0)
    with pytest.raises(ValueError):
        CliConfig(output="xml")


GROUPS = ["A5", "A6", "A7", "S5", "PSL(2,7)", "PSL(2,8)", "GL(2,3)", "SL(2,5)", "PSU(3,3)",
          "M11", "Sz(8)", "E8(2)", "2G2(27)", "M12", "C11", "POmega(+,8,2)"]


@settings(max_examples=40)
@given(st.sampled_from(GROUPS), st.sampled_from([2, 3, 5, 7, 11, 13]))
def test_classify_json_round_trip(group, p):
    code, out = run("classify", group, "--p", str(p), "--json")
    d = json.loads(out)
    assert d == in_xp(parse_group(group), p).to_dict()
    assert json.loads(json.dumps(d)) == d


@settings(max_examples=15)
@given(st.sampled_from(["A5", "A6", "S4", "PSL(2,7)", "GL(2,3)", "SL(2,5)", "PSL(2,11)"]),
       st.sampled_from([2, 3, 5, 7, 11]))
def test_verify_json_round_trip(group, p):
    from startree.oracle import crosscheck
    from startree.permgrp import representation
    code, out = run("verify", group, "--p", str(p), "--json")
    g = parse_group(group)
    assert json.loads(out) == crosscheck(g, representation(g), p).to_dict()
    assert code == 0


def test_console_script():
    res = subprocess.run([sys.executable, "-m", "startree.cli", "classify", "A5", "--p", "5"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and "InXp" in res.stdout
