import json
import subprocess
import sys

import pytest

from schur_repdim.characters import Character
from schur_repdim.cli import main
from schur_repdim.modules import InjectiveDescriptor
from schur_repdim.oracle import OracleReport
from schur_repdim.planner import ConstructionResult


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, "--json", *argv)
    return code, json.loads(out)


@pytest.mark.parametrize("weight, terms, dim", [("(1,0)", 2, 2), ("(3,0)", 4, 4), ("(2,1,0)", 7, 8)])
def test_char(capsys, weight, terms, dim):
    code, data = run_json(capsys, "char", weight)
    assert code == 0
    x = Character.from_json(data)
    assert len(x) == terms and x.dimension() == dim
    code, out, _ = run(capsys, "char", "-n", str(len(x.support()[0])), weight)
    assert f"dimension: {dim}" in out


def test_char_rank_mismatch_is_usage_error(capsys):
    code, _, err = run(capsys, "char", "-n", "3", "(1,0)")
    assert code == 1 and "rank" in err


def test_bad_literal_is_usage_error(capsys):
    with pytest.raises(SystemExit) as info:
        main(["char", "(a,b)"])
    assert info.value.code == 1


def test_orbit_and_dominance(capsys):
    code, data = run_json(capsys, "orbit", "(2,1,0)")
    assert code == 0 and data["size"] == 6
    code, data = run_json(capsys, "dominance", "(1,1)", "(2,0)")
    assert data["leq"] is True and data["geq"] is False


def test_padic(capsys):
    code, data = run_json(capsys, "padic", "-p", "3", "(8,4)")
    assert data["digits"] == [[2, 1], [2, 1]] and data["p_adic_breadth"] == 2
    code, _, _ = run(capsys, "padic", "-p", "3", "(1,-1)")
    assert code == 2


@pytest.mark.parametrize("n, p, lam, summands", [
    (2, 3, "(1,0)", 2), (3, 2, "(1,0,0)", 3), (2, 3, "(1,1)", 1)])
def test_brauer(capsys, n, p, lam, summands):
    code, data = run_json(capsys, "brauer", "-n", str(n), "-p", str(p), lam)
    assert code == 0 and data["pass"] is True
    assert len(data["summands"]) == summands
    code, out, _ = run(capsys, "brauer", "-n", str(n), "-p", str(p), lam)
    assert out.strip().endswith("PASS")


def test_brauer_regime_violation(capsys):
    code, _, err = run(capsys, "brauer", "-p", "3", "(3,0)")
    assert code == 2 and "b(lam)" in err


def test_zhat(capsys):
    code, data = run_json(capsys, "zhat", "-p", "3", "(5,-1,2)")
    assert code == 0 and Character.from_json(data).dimension() == 27


def test_tilting_and_hook(capsys):
    code, data = run_json(capsys, "tilting", "-p", "3", "(1,0)")
    d = InjectiveDescriptor.from_json(data)
    assert d.socle_weight == (2, 1) and d.end_dimension == 2
    code, data = run_json(capsys, "--no-character", "tilting", "-p", "3", "(1,0)")
    assert data["character"] is None
    code, data = run_json(capsys, "hook", "-n", "4", "-p", "5", "-a", "3")
    assert data["generators"] == 1 and data["cap"] == 4 and data["dimension"] == "4"
    code, data = run_json(capsys, "hook", "-n", "2", "-p", "3", "-m", "2", "-a", "4")
    assert data["socle_weight"] == [8, 4] and data["end_algebra"]["generators"] == 2
    code, _, _ = run(capsys, "hook", "-n", "2", "-p", "3", "-a", "3")
    assert code == 2


def test_construct(capsys):
    code, data = run_json(capsys, "construct", "classical", "-n", "2", "-p", "3", "-m", "1",
                          "-h", "2", "-r", "12")
    assert code == 0
    assert data["mu"] == [8, 4] and data["repdim_lower_bound"] == 3
    assert data["end_algebra"] == {"generators": 2, "cap": 2, "dimension": "4"}
    res = ConstructionResult.from_json(data)
    assert res.to_json() == data
    code, out, _ = run(capsys, "construct", "classical", "-n", "2", "-p", "3", "-m", "1",
                       "-h", "2", "-r", "12")
    assert "mu: (8,4)" in out and ">= 3" in out


def test_construct_no_character_and_flag_placement(capsys):
    args = ["construct", "classical", "-n", "3", "-p", "2", "-m", "2", "-h", "3", "-r", "5000"]
    code, data = run_json(capsys, *args, "--no-character")
    assert code == 0 and data["character"] is None and sum(data["mu"]) == 5000
    code, data2 = run_json(capsys, "--no-character", *args)
    assert data2 == data


def test_construct_threshold(capsys):
    code, _, err = run(capsys, "construct", "classical", "-n", "2", "-p", "3", "-m", "1",
                       "-h", "2", "-r", "11")
    assert code == 2 and "min_r = 12" in err
    code, _, err = run(capsys, "construct", "quantum", "-n", "2", "-p", "3", "-m", "1",
                       "-h", "1", "-r", "24")
    assert code == 1 and "-l" in err
    code, data = run_json(capsys, "construct", "quantum", "-n", "2", "-p", "3", "-m", "1",
                          "-h", "1", "-r", "24", "-l", "2")
    assert data["mu"] == [17, 7] and data["regime"] == "quantum" and data["l"] == 2


def test_bound(capsys):
    code, data = run_json(capsys, "bound", "classical", "-n", "2", "-p", "3", "-m", "1", "-r", "11")
    assert data["h"] == 1 and data["repdim_lower_bound"] == 2
    code, data = run_json(capsys, "bound", "classical", "-n", "2", "-p", "3", "-m", "1", "-r", "2")
    assert data["h"] == 0 and data["repdim_lower_bound"] is None
    code, data = run_json(capsys, "bound", "quantum", "-n", "2", "-p", "3", "-m", "1", "-r", "78",
                          "-l", "2")
    assert data["h"] == 2 and data["repdim_lower_bound"] == 4
    code, out, _ = run(capsys, "bound", "classical", "-n", "2", "-p", "3", "-m", "1", "-r", "11")
    assert "representation dimension >= 2" in out


def test_verify(capsys):
    code, data = run_json(capsys, "verify", "--max-n", "3", "--max-deg", "10",
                          "--primes", "2,3", "--seed", "7")
    assert code == 0 and data["pass"] is True
    reports = [OracleReport.from_json(r) for r in data["reports"]]
    assert all(r.passed for r in reports)
    code2, data2 = run_json(capsys, "--seed", "7", "verify", "--max-n", "3", "--max-deg", "10",
                            "--primes", "2,3")
    assert data2 == data


def test_deterministic_output(capsys):
    outs = [run(capsys, "--json", "char", "(3,1,0)")[1] for _ in range(2)]
    assert outs[0] == outs[1]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "schur_repdim", "char", "(1,0)"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "dimension: 2" in proc.stdout
