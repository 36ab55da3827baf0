import json
import subprocess
import sys

import pytest

from fivevertex.cli import main

SEC4_ATOM = ("b^2*z1^4*z2^3*z3^2 + b^2*z1^3*z2^4*z3^2 + b*z1^4*z2^2*z3^2 + 2*b*z1^3*z2^3*z3^2"
             " + 2*b*z1^2*z2^4*z3^2 + z1^3*z2^2*z3^2 + z1^2*z2^3*z3^2 + z1*z2^4*z3^2")


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_groth_trivial(capsys):
    assert run(capsys, "groth", "--lambda", "0", "-n", "2", "--method", "det") == (0, "1\n", "")


G21 = ("b^3*z1^2*z2^2*z3^2 + 2*b^2*z1^2*z2^2*z3 + 2*b^2*z1^2*z2*z3^2 + 2*b^2*z1*z2^2*z3^2"
       " + b*z1^2*z2^2 + 3*b*z1^2*z2*z3 + b*z1^2*z3^2 + 3*b*z1*z2^2*z3 + 3*b*z1*z2*z3^2"
       " + b*z2^2*z3^2 + z1^2*z2 + z1^2*z3 + z1*z2^2 + 2*z1*z2*z3 + z1*z3^2 + z2^2*z3 + z2*z3^2")


@pytest.mark.parametrize("method", ["det", "ddo", "lattice", "svt"])
def test_groth_methods_agree(capsys, method):
    code, out, _ = run(capsys, "groth", "--lambda", "2,1", "-n", "3", "--method", method)
    assert code == 0
    assert out.strip() == G21


@pytest.mark.parametrize("method", ["ddo", "lattice", "svt", "skyline"])
def test_atom_example(capsys, method):
    code, out, _ = run(capsys, "atom", "--lambda", "4,2,1", "-w", "s1 s2", "-n", "3", "--method", method)
    assert code == 0
    assert out.strip() == SEC4_ATOM


@pytest.mark.parametrize("method", ["ddo", "lattice", "lattice-prime", "svt"])
def test_lascoux_methods_agree(capsys, method):
    code, out, _ = run(capsys, "lascoux", "--lambda", "2,1,0", "-w", "2,3,1", "--method", method)
    assert code == 0
    assert out.strip() == ("b^2*z1^2*z2^2*z3 + b*z1^2*z2^2 + 2*b*z1^2*z2*z3 + 2*b*z1*z2^2*z3"
                           " + z1^2*z2 + z1^2*z3 + z1*z2^2 + z1*z2*z3 + z2^2*z3")


def test_json_output(capsys):
    code, out, _ = run(capsys, "--format", "json", "atom", "--lambda", "4,2,1", "-w", "s1s2", "-n", "3")
    data = json.loads(out)
    assert code == 0
    assert data["polynomial"] == SEC4_ATOM
    assert data["composition"] == [1, 4, 2]


def test_states_json(capsys):
    code, out, _ = run(capsys, "states", "--flavor", "atom", "--lambda", "4,2,1", "-w", "s1s2",
                       "-n", "3", "--format", "json")
    assert code == 0
    states = json.loads(out)
    assert len(states) == 3
    assert {s["m"] for s in states} == {7}
    code, out, _ = run(capsys, "states", "--flavor", "atom", "--lambda", "4,2,1", "-w", "s1s2",
                       "-n", "3", "-m", "8", "--format", "json")
    wide = json.loads(out)
    assert {s["m"] for s in wide} == {8}
    assert sorted(s["weight"] for s in wide) == sorted(s["weight"] for s in states)


def test_states_ascii(capsys):
    code, out, _ = run(capsys, "states", "--lambda", "1", "-n", "1", "--format", "ascii")
    assert code == 0
    assert "1 states" in out and "Z = z1" in out


def test_tableaux_enumerate(capsys):
    code, out, _ = run(capsys, "tableaux", "enumerate", "--lambda", "1", "-n", "2", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert len(data["tableaux"]) == 3
    assert data["generating_function"] == "b*z1*z2 + z1 + z2"
    code, out, _ = run(capsys, "tableaux", "enumerate", "--lambda", "4,2,1", "-n", "3",
                       "--kind", "key-class", "--w", "s1s2", "--format", "json")
    assert len(json.loads(out)["tableaux"]) == 10


def test_skyline_command(capsys):
    code, out, _ = run(capsys, "skyline", "--lambda", "4,2,1", "-w", "s1s2", "-n", "3")
    assert code == 0
    assert "10 skyline tableaux of shape [1, 4, 2]" in out
    assert SEC4_ATOM in out


def test_ybe_pass_and_fail(capsys):
    code, out, _ = run(capsys, "ybe", "--flavor", "uncolored")
    assert code == 0 and "64 boundaries" in out
    code, out, _ = run(capsys, "ybe", "--flavor", "atom", "--mutate", "a2=1")
    assert code == 1
    witness = json.loads(out)["witness"]
    assert witness["lhs"] != witness["rhs"]


def test_verify_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "thm43", "-n", "3", "--max-cells", "6")
    assert code == 0 and "PASS" in out


@pytest.mark.parametrize("argv", [
    ["groth", "--lambda", "1,2", "-n", "2"],
    ["groth", "--lambda", "x"],
    ["frobnicate"],
    ["lascoux", "--lambda", "2,1", "-w", "3,1,2", "-n", "2"],
    ["ybe", "--flavor", "atom", "--mutate", "nonsense"],
    ["states", "--lambda", "2,1", "-n", "3", "-m", "3"],
    ["verify", "--suite", "nope"],
])
def test_bad_arguments_exit_2(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "fivevertex", "groth", "--lambda", "1", "-n", "2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "b*z1*z2 + z1 + z2"
