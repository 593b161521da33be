import json

import pytest

from mkls.cli import main, parse_ranges, UsageError

U23 = '{"backend": "uniform", "k": 2, "n": 3}'
SP = '{"backend": "sparse_paving", "n": 4, "k": 2, "circuit_hyperplanes": [[0, 1]]}'


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_compute_uniform(capsys):
    code, out, _ = run(capsys, "compute", U23, "--json")
    data = json.loads(out)
    assert code == 0 and data["Y"] == [2, 3, 2] and data["predicates"]["Y_palindromic"]


def test_compute_sparse_paving_from_file(capsys, tmp_path):
    spec = tmp_path / "m.json"
    spec.write_text(SP)
    code, out, _ = run(capsys, "compute", str(spec), "--json")
    assert code == 0 and json.loads(out)["Y"] == [2, 3, 2]


@pytest.mark.parametrize("spec", ["{bad", '{"backend": "uniform", "k": 2}', "/no/such/file.json"])
def test_compute_bad_spec_exits_2(capsys, spec):
    code, _, err = run(capsys, "compute", spec)
    assert code == 2 and "error" in err


def test_compute_cap(capsys):
    big = '{"backend": "uniform", "k": 2, "n": 17}'
    assert run(capsys, "compute", big)[0] == 2


def test_cache_dir(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("MKLS_CACHE_DIR", str(tmp_path))
    first = run(capsys, "compute", U23, "--json")[1]
    assert len(list(tmp_path.glob("*.json"))) == 1
    assert run(capsys, "compute", U23, "--json")[1] == first


def test_formula(capsys):
    code, out, _ = run(capsys, "formula", "equiv_Y_uniform", "k=2", "n=3")
    assert code == 0 and out.strip() == "s_(2,1) + (s_(3) + s_(2,1))t + s_(2,1)t^2"
    code, out, _ = run(capsys, "formula", "ordinary_Y_qniform", "k=1", "n=5", "q=3", "--json")
    assert json.loads(out)["value"] == [1, 1]
    a = run(capsys, "formula", "paving_delta", "k=3", "h=4", "--json")[1]
    b = run(capsys, "formula", "equiv_Y_uniform", "k=3", "n=4", "--json")[1]
    assert json.loads(a)["value"] == json.loads(b)["value"]


@pytest.mark.parametrize("argv", [["nope"], ["equiv_Y_uniform", "k=2"], ["equiv_Y_uniform", "k=3", "n=2"], ["paving_delta", "k=x", "h=2"]])
def test_formula_usage_errors(capsys, argv):
    assert run(capsys, "formula", *argv)[0] == 2


def test_verify_pass_and_byte_stable(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert run(capsys, "verify", "thm1.1", "lem3.5", "--range", "n=..6", "--json", "--out", str(a))[0] == 0
    assert run(capsys, "verify", "thm1.1", "lem3.5", "--range", "n=..6", "--json", "--out", str(b), "--jobs", "2")[0] == 0
    assert a.read_bytes() == b.read_bytes()
    assert json.loads(a.read_text())["status"] == "pass"


def test_verify_usage_errors(capsys):
    assert run(capsys, "verify", "thm9.9")[0] == 2
    assert run(capsys, "verify", "thm1.1", "--range", "n=..20")[0] == 2
    assert run(capsys, "verify", "thm1.1", "--range", "n=5..2")[0] == 2
    assert run(capsys, "bogus")[0] == 2


def test_relax(capsys):
    mkh = '{"backend": "direct_sum", "summands": [{"backend": "uniform", "k": 1, "n": 3}, {"backend": "boolean", "n": 1}]}'
    code, out, _ = run(capsys, "relax", mkh, "--json")
    data = json.loads(out)
    assert code == 0 and data["match"] and data["relaxed"] == [[0, 1, 2]]
    sp = '{"backend": "sparse_paving", "n": 6, "k": 3, "circuit_hyperplanes": [[0, 1, 2], [3, 4, 5]]}'
    data = json.loads(run(capsys, "relax", sp, "--json")[1])
    assert data["difference"] == [2, 6, 6, 2] and data["Y_after"] == [10, 24, 24, 10]
    code, out, _ = run(capsys, "relax", '{"backend": "uniform", "k": 2, "n": 4}', "--json")
    assert code == 0 and json.loads(out)["difference"] == []
    assert run(capsys, "relax", '{"backend": "uniform", "k": 2, "n": 4}', "--hyperplane", "0,1")[0] == 2


def test_explore_reproducible(capsys):
    a = run(capsys, "explore", "--seed", "1", "--count", "30", "--range", "n=4..7", "--json")
    b = run(capsys, "explore", "--seed", "1", "--count", "30", "--range", "n=4..7", "--json")
    assert a == b and a[0] == 0 and json.loads(a[1])["findings"] == []


def test_parse_ranges():
    assert parse_ranges("k=1..4,n=..9,count=5") == {"k": (1, 4), "n": (None, 9), "count": 5}
    assert parse_ranges("n=3") == {"n": (3, 3)}
    with pytest.raises(UsageError):
        parse_ranges("n")
    with pytest.raises(UsageError):
        parse_ranges("n=a..b")
