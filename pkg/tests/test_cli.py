import json

from main import EXIT_INPUT, EXIT_INVARIANT, EXIT_OK, EXIT_UNDECIDED, main
from src.classpoly import ClassPolyCache


def test_jinv_example1(orders_dir, capsys):
    assert main(["jinv", str(orders_dir / "example_p61.json")]) == EXIT_OK
    out = capsys.readouterr().out
    assert "X - 41 (mod 61)" in out
    assert "j(O) = 41" in out


def test_jinv_trace_and_report(orders_dir, tmp_path, capsys):
    report = tmp_path / "run.json"
    code = main(["jinv", str(orders_dir / "example_p61.json"), "--trace", "--report", str(report)])
    assert code == EXIT_OK
    data = json.loads(report.read_text())
    assert data["outputs"]["root"] == 41
    assert data["trace"][0]["d"] == 7
    assert data["exit_code"] == EXIT_OK


def test_jinv_non_maximal(tmp_path, capsys):
    path = tmp_path / "order.json"
    basis = [["1", "0", "0", "0"], ["0", "1", "0", "0"], ["0", "0", "1", "0"], ["0", "0", "0", "1"]]
    path.write_text(json.dumps({"p": 61, "a": 61, "b": 7, "basis": basis}))
    assert main(["jinv", str(path)]) == EXIT_INPUT
    assert "is_maximal" in capsys.readouterr().err


def test_jinv_undecided(orders_dir, monkeypatch, capsys):
    monkeypatch.setattr("src.algorithms.jinvariant.get_setting", lambda name: 0.05)
    assert main(["jinv", str(orders_dir / "example_p61.json")]) == EXIT_UNDECIDED


def test_hilbert(capsys):
    assert main(["hilbert", "-D", "7"]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "X + 3375"
    assert main(["hilbert", "-D", "7", "-p", "61"]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "X + 20 (mod 61)"


def test_hilbert_bad_discriminant(capsys):
    assert main(["hilbert", "-D", "5"]) == EXIT_INPUT
    assert "Error" in capsys.readouterr().err


def test_match_all_rejects_composites(capsys):
    assert main(["match-all", "-p", "4"]) == EXIT_INPUT
    assert "not prime" in capsys.readouterr().err


def test_match_all_with_oracle(tmp_path, capsys):
    output = tmp_path / "pairs.json"
    assert main(["match-all", "-p", "61", "--oracle-check", "-o", str(output)]) == EXIT_OK
    assert "Oracle check: match" in capsys.readouterr().out
    data = json.loads(output.read_text())
    assert len(data["pairs"]) == 4
    assert data["oracle"] == "match"


def test_restricted_match_all(capsys, tmp_path):
    output = tmp_path / "pairs.json"
    assert main(["match-all", "-p", "61", "--restrict-fp", "-o", str(output)]) == EXIT_OK
    assert len(json.loads(output.read_text())["pairs"]) == 3


def test_oracle(capsys):
    assert main(["oracle", "-p", "7"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "Roots in F_7: 6" in out


def test_order_info(orders_dir, tmp_path, capsys):
    output = tmp_path / "info.json"
    assert main(["order-info", str(orders_dir / "example_p61.json"), "-o", str(output)]) == EXIT_OK
    info = json.loads(output.read_text())
    assert info["maximal"] is True
    assert info["minima"] == [7, 35, 71]
    assert info["units"] == 2
    assert info["has_sqrt_minus_p"] is True


def test_types(capsys):
    assert main(["types", "-p", "61"]) == EXIT_OK
    assert "class number: 5" in capsys.readouterr().out


def test_verify(capsys):
    assert main(["verify", "-p", "61", "--dominance", "366", "--theorem1"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "antisymmetric = True" in out


def test_wrong_cached_polynomial_fails_the_run(tmp_path, monkeypatch, capsys):
    (tmp_path / "H_7.txt").write_text("7 1\n1\n3376\n")
    monkeypatch.setattr("main.default_cache", lambda: ClassPolyCache(tmp_path))
    assert main(["hilbert", "-D", "8"]) == EXIT_INVARIANT
    assert "differs from a fresh computation" in capsys.readouterr().err


def test_cached_polynomials_are_spot_checked(tmp_path, monkeypatch, capsys):
    cache = ClassPolyCache(tmp_path)
    cache.get(7)
    monkeypatch.setattr("main.default_cache", lambda: cache)
    assert main(["hilbert", "-D", "7"]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "X + 3375"
