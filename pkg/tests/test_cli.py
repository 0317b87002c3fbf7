import json
import subprocess
import sys
from pathlib import Path

import pytest

from pposet.cli import main

DATA = Path(__file__).parent / "data"
GOLDEN = Path(__file__).parent / "golden"
FIXTURES = ["chain2", "anti2", "v3", "lambda3", "claw4", "diamond4"]


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def poset(name):
    return str(DATA / f"{name}.poset")


@pytest.mark.parametrize("name", FIXTURES)
def test_golden(capsys, name):
    code, out, _ = run(capsys, "analyze", "--poset", poset(name))
    assert code == 0
    assert out == (GOLDEN / f"{name}.json").read_text()


def test_ideals(capsys):
    assert run(capsys, "ideals", "--poset", poset("v3"))[1] == "{0}\n{0,1}\n{0,2}\n{0,1,2}\n"
    code, out, _ = run(capsys, "ideals", "--poset", poset("anti2"), "--all")
    assert out == "{0}\n{1}\n{0,1}\n"


def test_gamma(capsys):
    code, out, _ = run(capsys, "gamma", "--poset", poset("v3"))
    assert out.splitlines() == ["vertices 4", "edges 1", "{0,1} -- {0,2}", "degrees 0,0,1,1"]
    code, out, _ = run(capsys, "gamma", "--poset", poset("v3"), "--dot")
    assert out.startswith("graph Gamma {") and out.count(" -- ") == 1


def test_present(capsys):
    assert run(capsys, "present", "--poset", poset("v3"))[1] == "U{0,1}*U{0,2} - U{0,1,2}*U{0}\n"


def test_check_ci(capsys):
    code, out, _ = run(capsys, "check-ci", "--poset", poset("v3"))
    assert code == 0
    assert out.splitlines() == [
        "graph: true (max degree 1)",
        "count: true (m=4 s=1 r=3)",
        "recognizer: true",
        "complete intersection: true",
    ]


def test_check_ci_disagreement_exit_code(capsys, monkeypatch):
    import pposet.presentation as pres

    monkeypatch.setattr(pres, "recognize", lambda P: None)
    code, _, err = run(capsys, "check-ci", "--poset", poset("v3"))
    assert code == 2 and "internal error" in err


def test_recognize(capsys):
    assert run(capsys, "recognize", "--poset", poset("claw4"))[1] == "NOT-FWD\n"
    code, out, _ = run(capsys, "recognize", "--poset", poset("diamond4"), "--json")
    assert json.loads(out)["certificate"]["kind"] == "dup"


def test_hilbert_and_extensions(capsys):
    assert run(capsys, "hilbert", "--poset", poset("v3"), "--degree", "3", "--method", "both")[1] == "1,1,3,4\n"
    code, _, err = run(capsys, "hilbert", "--poset", poset("claw4"), "--method", "ci")
    assert code == 1 and "not a complete intersection" in err
    assert run(capsys, "extensions", "--poset", poset("claw4"))[1] == "6\n"
    assert run(capsys, "extensions", "--poset", poset("diamond4"), "--method", "ci")[1] == "2\n"


def test_errors(capsys, tmp_path):
    assert run(capsys, "check-ci", "--poset", str(tmp_path / "missing.poset"))[0] == 1
    bad = tmp_path / "cycle.poset"
    bad.write_text("n 2\n0 1\n1 0\n")
    assert run(capsys, "check-ci", "--poset", str(bad))[0] == 1
    assert run(capsys, "nonsense")[0] == 1
    assert run(capsys, "hilbert")[0] == 1
    assert run(capsys, "random", "--n", "3", "--p", "2", "--seed", "1")[0] == 1
    assert run(capsys, "random", "--n", "3", "--p", "0.5", "--seed", str(2**64))[0] == 1
    assert run(capsys, "census", "--n", "9")[0] == 1


def test_census_csv(capsys, tmp_path):
    out_path = tmp_path / "c.csv"
    code, out, _ = run(capsys, "census", "--n", "3", "--csv", str(out_path))
    lines = out_path.read_text().splitlines()
    assert code == 0 and lines[0] == "n,id,m_ideals,s_edges,ci,extensions" and len(lines) == 20
    assert lines[1] == "3,0,3,0,true,6"


def test_random_output_parses(capsys):
    from pposet.poset import parse_poset

    code, out, _ = run(capsys, "random", "--n", "5", "--p", "0.4", "--seed", "9", "--count", "3")
    chunks = out.strip().split("\n\n")
    assert len(chunks) == 3
    assert all(parse_poset(c).n == 5 for c in chunks)


def subprocess_output(*argv):
    return subprocess.run(
        [sys.executable, "-m", "pposet", *argv], capture_output=True, check=True
    ).stdout


@pytest.mark.parametrize(
    "argv",
    [
        ("analyze", "--poset", str(DATA / "diamond4.poset")),
        ("gamma", "--poset", str(DATA / "claw4.poset"), "--dot"),
        ("census", "--n", "4"),
        ("random", "--n", "8", "--p", "0.3", "--seed", "18446744073709551615", "--count", "5", "--json"),
    ],
)
def test_byte_identical_across_processes(argv):
    assert subprocess_output(*argv) == subprocess_output(*argv)
