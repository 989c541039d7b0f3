import json
import os
import subprocess
import sys

import pytest

from qcluster import cli

FIX = cli.FIXTURE_ROOT


def run_cli(*argv):
    return cli.main(list(argv))


def test_ccmap_fixture(capsys):
    rc = run_cli("ccmap", "--quiver", "kronecker", "--rep", "r1.rep", "--prime", "3")
    out = capsys.readouterr().out.strip()
    assert rc == 0
    assert out == ("1 * X^(-1,-1,1,0) + 1 * X^(-1,1,0,0) + 1 * X^(1,-1,1,1)")


def test_ccmap_json(capsys):
    rc = run_cli("ccmap", "--quiver", "kronecker", "--rep", "s1.rep",
                 "--prime", "3", "--json")
    assert rc == 0
    data = json.loads(capsys.readouterr().out)
    assert {"exponent": [-1, 0, 1, 0], "coeff": "1"} in data


def test_grass_trivial(capsys):
    rc = run_cli("grass", "--quiver", "kronecker", "--rep", "r1.rep", "--e", "0,0")
    assert rc == 0
    assert capsys.readouterr().out.strip() == "1"


def test_verify_exit_codes(capsys):
    rc = run_cli("verify", "lem5.4", "--prime", "3")
    assert rc == 0
    capsys.readouterr()


def test_usage_error(capsys):
    rc = run_cli("ccmap", "--quiver", "nosuch", "--rep", "r1.rep")
    assert rc == 2
    assert "error" in capsys.readouterr().err


def test_budget_exit(capsys):
    rc = run_cli("--budget-orbits", "2", "verify", "thm3.3", "--quiver", "kronecker")
    assert rc == 3
    capsys.readouterr()


def test_mutate_prints_seed(capsys):
    rc = run_cli("mutate", "--quiver", "kronecker", "--seq", "1")
    out = capsys.readouterr().out
    assert rc == 0
    assert "X1 = 1 * X^(-1,0,1,0) + 1 * X^(-1,2,0,0)" in out


def test_tau_roundtrip(capsys):
    rc = run_cli("tau", "--quiver", "a2", "--rep", "s2.rep")
    out = capsys.readouterr().out
    assert rc == 0
    rep, _ = cli.parse_rep(out, os.path.join(FIX, "a2"), 3)
    assert rep.dims == (1, 0)


def test_reflect_command(capsys):
    rc = run_cli("reflect", "--quiver", "a2", "--rep", "s2.rep", "--vertex", "1")
    out = capsys.readouterr().out
    assert rc == 0
    assert "dims 1 1" in out


def test_rep_parse_roundtrip():
    path = os.path.join(FIX, "kronecker", "r1.rep")
    text = open(path).read()
    rep, framed = cli.parse_rep(text, os.path.dirname(path))
    assert rep.dims == (1, 1)
    assert framed.m == 4
    printed = cli.print_rep(rep, "kronecker")
    rep2, _ = cli.parse_rep(printed, os.path.dirname(path))
    assert rep2 == rep


def test_family_parse():
    path = os.path.join(FIX, "kronecker", "r1.family")
    fam, _framed = cli.parse_rep(open(path).read(), os.path.dirname(path))
    from qcluster.families import RepFamily
    assert isinstance(fam, RepFamily)
    assert fam.instantiate(5).mats[1] == ((4,),)


def test_malformed_rep_error():
    with pytest.raises(cli.InputError):
        cli.parse_rep("rep p=3 quiver=kronecker\nbogus\n", None)
    with pytest.raises(cli.InputError):
        cli.parse_rep("rep p=3 quiver=kronecker\ndims 1 1\nmat 9\n", None)


def test_quiver_roundtrip_fixture_files():
    from qcluster.quiver import IceQuiver
    from qcluster import catalog
    for name in catalog.NAMES:
        path = os.path.join(FIX, name, "quiver.txt")
        q = IceQuiver.from_text(open(path).read())
        assert q == catalog.get(name).framed
        assert IceQuiver.from_text(q.to_text()) == q


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "qcluster.cli", "grass",
                           "--quiver", "kronecker", "--rep", "s1.rep",
                           "--e", "1,0"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "1"


def test_determinism_byte_identical():
    proc1 = subprocess.run([sys.executable, "-m", "qcluster.cli", "ccmap",
                            "--quiver", "kronecker", "--rep", "r2.rep"],
                           capture_output=True, text=True)
    proc2 = subprocess.run([sys.executable, "-m", "qcluster.cli", "ccmap",
                            "--quiver", "kronecker", "--rep", "r2.rep"],
                           capture_output=True, text=True)
    assert proc1.stdout == proc2.stdout
    assert proc1.returncode == proc2.returncode == 0
