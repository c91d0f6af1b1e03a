import csv
import io
import json
import subprocess
import sys

import pytest
from hypothesis import given, settings, strategies as st

from pythspin import cli, hall


def run(*argv):
    out = io.StringIO()
    code = cli.run(list(argv), stdout=out)
    return code, out.getvalue()


def test_triple_and_euclid():
    assert run("triple", "URLLU") == (0, "3115 3348 4573\n")
    assert run("triple", "urllu") == (0, "3115 3348 4573\n")
    assert run("triple", "-") == (0, "3 4 5\n")
    assert run("euclid", "2", "1") == (0, "3 4 5\n")


def test_word(capsys):
    assert run("word", "3115", "3348", "4573") == (0, "URLLU\n")
    assert run("word", "3", "4", "5") == (0, "-\n")
    assert run("word", "12", "5", "13") == (0, "L\n")
    assert "swapped" in capsys.readouterr().err


def test_spinor():
    assert run("spinor", "21", "20", "29") == (0, "5 2\n")


@pytest.mark.parametrize("argv", [
    ("word", "6", "8", "10"),
    ("word", "3", "4", "6"),
    ("spinor", "1", "1", "1"),
    ("spinor", "4", "3", "5"),
])
def test_domain_errors_exit_1(argv, capsys):
    assert run(*argv)[0] == 1
    assert capsys.readouterr().err


@pytest.mark.parametrize("argv", [
    (),
    ("nope",),
    ("triples",),
    ("triples", "--depth", "-1"),
    ("triple", "UX"),
    ("euclid", "1"),
    ("tuples", "--algebra", "sedenion"),
    ("quadruples", "--params", "1", "2", "3"),
    ("gasket",),
])
def test_usage_errors_exit_2(argv, capsys):
    assert run(*argv)[0] == 2


def test_triples_formats():
    code, human = run("triples", "--depth", "1")
    assert code == 0
    assert human.splitlines() == ["- 3 4 5", "U 21 20 29", "L 5 12 13", "R 15 8 17"]
    rows = [json.loads(l) for l in run("triples", "--max-c", "30", "--format", "json")[1].splitlines()]
    assert rows[0] == {"word": "-", "x": 3, "y": 4, "z": 5}
    assert len(rows) == 5
    rows = list(csv.DictReader(io.StringIO(run("triples", "--depth", "2", "--format", "csv")[1])))
    assert len(rows) == 13 and rows[1] == {"word": "U", "x": "21", "y": "20", "z": "29"}


def test_generators():
    assert run("quadruples", "--params", "4", "2", "4", "1") == (0, "3 36 8 37\n")
    code, out = run("hexads", "--params", "1", "2", "2", "1", "2", "1", "1", "1", "--format", "json")
    rec = json.loads(out)
    assert rec["signature"] == [5, 1] and rec["values"][-1] == 17
    assert run("tuples", "--algebra", "duplex", "--params", "2", "1", "1", "0") == (0, "2 4 4 2\n")
    code, out = run("tuples", "--algebra", "octonion", "--count", "5", "--seed", "3")
    assert code == 0 and len(out.splitlines()) == 5
    for line in out.splitlines():
        v = list(map(int, line.split()))
        assert sum(x * x for x in v[:9]) == v[9] ** 2


def test_generators_seeded():
    a = run("quadruples", "--count", "20", "--seed", "7")
    assert a == run("quadruples", "--count", "20", "--seed", "7")
    assert a != run("quadruples", "--count", "20", "--seed", "8")
    assert run("quadruples", "--count", "3") == run("quadruples", "--count", "3", "--seed", "0")


def test_verify():
    code, out = run("verify", "--suite", "hall")
    assert code == 0
    assert out.splitlines()[-1].endswith("identities passed")
    assert "FAIL" not in out


def test_verify_reports_failure(monkeypatch):
    from pythspin import verify

    monkeypatch.setitem(verify.SUITES, "hall", lambda rng: [verify.Check("hall", "broken", False)])
    code, out = run("verify", "--suite", "hall")
    assert code == 1 and "FAIL [hall] broken" in out


def test_gasket_outputs(tmp_path, capsys):
    code, out = run("gasket", "--depth", "1")
    assert code == 0 and out.splitlines()[:2] == ["0 -1 0 0", "0 2 1 0"]
    rows = [json.loads(l) for l in run("gasket", "--depth", "1", "--format", "json")[1].splitlines()]
    assert rows[4] == {"b": 15, "bx": 0, "by": 4, "depth": 1}
    path = tmp_path / "w.svg"
    assert run("gasket", "--depth", "2", "--svg", str(path), "--labels", "triples")[0] == 0
    text = path.read_text()
    assert text.startswith("<?xml") and ">3,4,5</text>" in text
    code, out = run("gasket", "--depth", "0", "--svg", "-")
    assert out.count("<circle ") == 4


@settings(max_examples=50)
@given(st.text(alphabet=hall.ALPHABET, max_size=8))
def test_word_triple_round_trip(w):
    code, out = run("triple", w or "-")
    a, b, c = out.split()
    assert run("word", a, b, c) == (0, (w or "-") + "\n")


@settings(max_examples=50)
@given(st.integers(1, 60), st.integers(-60, 60))
def test_spinor_euclid_round_trip(m, n):
    code, out = run("euclid", str(m), str(n))
    assert run("spinor", *out.split()) == (0, f"{m} {n}\n")


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "pythspin", "euclid", "2", "1"],
                          capture_output=True, text=True, check=True)
    assert proc.stdout == "3 4 5\n"
