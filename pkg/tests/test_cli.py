import json
import subprocess
import sys

import pytest

from conftest import PROGRAMS, load
from lpod.answer_sets import enumerate_answer_sets
from lpod.characterization import answer_sets_oracle
from lpod.cli import compare, main, solve_reports
from lpod.preference import most_preferred


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def solve_json(capsys, name, *flags):
    code, out, _ = run(capsys, "solve", PROGRAMS / name, "--json", *flags)
    assert code == 0
    return json.loads(out)


def test_solve_wine_text(capsys):
    code, out, _ = run(capsys, "solve", PROGRAMS / "wine.lpod")
    assert code == 0
    assert "Answer set 2: {wine=T, beer=F}  [most preferred]" in out
    assert "Answer set 1: {wine=F*, beer=T}\n" in out


def test_solve_wine_json(capsys):
    data = solve_json(capsys, "wine.lpod")
    assert set(data) == {"program", "semantics", "sigma", "answer_sets", "most_preferred_indices"}
    assert data["semantics"] == "new"
    assert data["sigma"] == ["wine", "beer"]
    assert data["answer_sets"][1] == {
        "assignment": {"wine": "T", "beer": "F"},
        "fstar_set": [],
        "collapse": ["wine"],
        "most_preferred": True,
    }
    assert data["most_preferred_indices"] == [1]


def test_solve_matches_library(capsys):
    p = load("mercedes.lpod")
    found = enumerate_answer_sets(p)
    data = solve_json(capsys, "mercedes.lpod")
    assert [a["assignment"] for a in data["answer_sets"]] == [m.to_json() for m in found]
    best = most_preferred(found)
    assert [a["most_preferred"] for a in data["answer_sets"]] == [m in best for m in found]
    assert [r.to_json() for r in solve_reports(p, "new")] == data["answer_sets"]


def test_solve_brewka_hotels_v2(capsys):
    data = solve_json(capsys, "hotels_v2.lpod", "--semantics", "brewka")
    flagged = [a["collapse"] for a in data["answer_sets"] if a["most_preferred"]]
    assert flagged == [["-four_stars", "-three_stars", "two_stars", "walking"]]
    assert data["answer_sets"][1]["brewka_degrees"] == {"1": 1, "2": 3, "3": 1, "4": 1, "5": 1}


def test_solve_new_hotels_v2_both_flagged(capsys):
    data = solve_json(capsys, "hotels_v2.lpod")
    assert [a["most_preferred"] for a in data["answer_sets"]] == [True, True]


def test_solve_oracle_matches(capsys):
    data = solve_json(capsys, "pub.lpod", "--semantics", "oracle")
    assert [a["assignment"] for a in data["answer_sets"]] == [m.to_json() for m in answer_sets_oracle(load("pub.lpod"))]
    assert data["most_preferred_indices"] == [2]


def test_solve_threads(capsys):
    assert solve_json(capsys, "hotels_v1.lpod", "--threads", "2")["answer_sets"] == solve_json(capsys, "hotels_v1.lpod")["answer_sets"]


def test_solve_brewka_on_dlpod_is_unsupported(capsys):
    code, _, err = run(capsys, "solve", PROGRAMS / "pub.lpod", "--semantics", "brewka")
    assert code == 4
    assert err.startswith("error:")


def test_solve_no_answer_sets(tmp_path, capsys):
    f = tmp_path / "none.lpod"
    f.write_text("a :- not a.\n")
    code, out, _ = run(capsys, "solve", f)
    assert code == 3
    assert "No answer sets." in out


def test_solve_parse_error(tmp_path, capsys):
    f = tmp_path / "bad.lpod"
    f.write_text("a *\n")
    code, _, err = run(capsys, "solve", f)
    assert code == 1
    assert "line 2, column 1: expected '-' or identifier, found end of input" in err


def test_solve_missing_file(capsys):
    assert run(capsys, "solve", PROGRAMS / "missing.lpod")[0] == 1


def test_solve_budget(capsys):
    code, _, err = run(capsys, "solve", PROGRAMS / "mercedes.lpod", "--budget", "10")
    assert code == 2
    assert "budget" in err


def test_compare(capsys):
    code, out, _ = run(capsys, "compare", PROGRAMS / "mercedes.lpod")
    assert code == 0
    assert out.splitlines()[-1] == "DIVERGES"
    code, out, _ = run(capsys, "compare", PROGRAMS / "wine.lpod", "--json")
    assert json.loads(out) == {
        "program": str(PROGRAMS / "wine.lpod"),
        "new_most_preferred": [["wine"]],
        "brewka_most_preferred": [["wine"]],
        "verdict": "AGREES",
    }
    assert compare(load("hotels_v1.lpod"))["verdict"] == "AGREES"


@pytest.mark.parametrize(
    "text, code, message",
    [
        ('{"wine": "F", "beer": "T"}', 3, "not the least model of the reduct"),
        ('{"wine": "T", "beer": "F"}', 0, "answer set"),
        ('{"wine": "T", "beer": "T"}', 3, "not the least model of the reduct"),
        ('{"wine": "T"}', 1, None),
        ('{"wine": "T", "beer": "F", "cola": "F"}', 1, None),
        ('{"wine": "T*", "beer": "F"}', 1, None),
        ('["wine"]', 1, None),
        ("{not json", 1, None),
    ],
)
def test_check(capsys, text, code, message):
    got, out, _ = run(capsys, "check", PROGRAMS / "wine.lpod", "--interp", text)
    assert got == code
    if message:
        assert message in out


def test_check_inconsistent(capsys):
    text = '{"wine": "T", "beer": "F", "-wine": "T"}'
    code, out, _ = run(capsys, "check", PROGRAMS / "wine_nowine.lpod", "--interp", text)
    assert code == 3
    assert "inconsistent" in out


def test_check_from_file(tmp_path, capsys):
    f = tmp_path / "i.json"
    f.write_text('{"pub": "F*", "cinema": "T", "tv": "F"}')
    assert run(capsys, "check", PROGRAMS / "pub.lpod", "--interp", f"@{f}")[0] == 0


def test_check_dlpod_minimality_reason(capsys):
    text = '{"pub": "F*", "cinema": "T", "tv": "T"}'
    code, out, _ = run(capsys, "check", PROGRAMS / "pub.lpod", "--interp", text)
    assert code == 3
    assert "not a minimal model of the reduct" in out


def test_reduct(capsys):
    code, out, _ = run(capsys, "reduct", PROGRAMS / "pub.lpod", "--interp", '{"pub": "F*", "cinema": "T", "tv": "F"}')
    assert code == 0
    assert out == "pub :- F*.\n(cinema v tv).\n"


def test_equiv(capsys):
    code, out, _ = run(capsys, "equiv", "x1 * (x2 v x3)", "(x1 * x2) v (x1 * x3)")
    assert (code, out) == (0, "EQUIVALENT\n")
    code, out, _ = run(capsys, "equiv", "not (x1 & x2)", "not x1 v not x2")
    assert code == 0
    code, out, _ = run(capsys, "equiv", "(x1 v x2) * x3", "(x1 * x3) v (x2 * x3)")
    assert code == 3
    assert out == "NOT EQUIVALENT\ncounterexample: x1=F*, x2=T*, x3=T  left=T* right=T\n"


def test_equiv_json(capsys):
    code, out, _ = run(capsys, "equiv", "(x1 v x2) * x3", "(x1 * x3) v (x2 * x3)", "--json")
    assert code == 3
    assert json.loads(out) == {
        "equivalent": False,
        "variables": ["x1", "x2", "x3"],
        "counterexample": {"x1": "F*", "x2": "T*", "x3": "T"},
        "left": "T*",
        "right": "T",
    }


def test_equiv_parse_error(capsys):
    assert run(capsys, "equiv", "x *", "x")[0] == 1


def test_json_is_byte_stable():
    cmd = [sys.executable, "-m", "lpod", "solve", str(PROGRAMS / "hotels_v2.lpod"), "--json"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second
    assert json.loads(first)["most_preferred_indices"] == [0, 1]
