import json

import pytest

from src.main import main
from src.services.obstructions import complete, wall
from src.storage.pace_store import read_gr, write_gr


@pytest.fixture
def run(capsys):
    """Запуск main с разбором JSON-отчета"""
    def invoke(*argv):
        code = main(["--json", *argv])
        out = capsys.readouterr().out
        return code, json.loads(out)
    return invoke


def _file(tmp_path, name, G):
    path = str(tmp_path / name)
    write_gr(path, G)
    return path


# ============================================================
# Генерация и проверка
# ============================================================


class TestGenerate:

    def test_wall_to_file(self, tmp_path, run):
        out = str(tmp_path / "wall.gr")
        code, report = run("gen", "wall", "--t", "3", "--out", out)
        assert code == 0
        assert report["verdict"] == "built"
        assert read_gr(out) == wall(3)

    def test_randomised_needs_seed(self, tmp_path, capsys):
        assert main(["gen", "array", "--n", "2", "--min-len", "2", "--max-len", "6"]) == 2
        assert "--seed" in capsys.readouterr().err

    def test_seeded_array_is_reproducible(self, tmp_path, run):
        first, second = str(tmp_path / "a.gr"), str(tmp_path / "b.gr")
        run("--seed", "7", "gen", "array", "--n", "2", "--min-len", "2", "--max-len", "6", "--out", first)
        run("--seed", "7", "gen", "array", "--n", "2", "--min-len", "2", "--max-len", "6", "--out", second)
        assert read_gr(first) == read_gr(second)

    def test_tassel_then_check(self, tmp_path, run):
        graph, witness = str(tmp_path / "t.gr"), str(tmp_path / "t.json")
        run("gen", "tassel", "--pattern", "00100", "--count", "3", "--out", graph, "--witness-out", witness)
        code, report = run("check", "tassel", "--input", graph, "--witness", witness, "--c", "2")
        assert code == 0
        assert report["input_hashes"].keys() == {graph, witness}
        code, report = run("check", "tassel", "--input", graph, "--witness", witness, "--c", "3")
        assert code == 1
        assert report["data"]["violation"].startswith("padding")

    def test_wrong_witness_kind(self, tmp_path, run):
        graph, witness = str(tmp_path / "t.gr"), str(tmp_path / "t.json")
        run("gen", "tassel", "--pattern", "010", "--count", "2", "--out", graph, "--witness-out", witness)
        code, report = run("check", "hassle", "--input", graph, "--witness", witness, "--c", "1")
        assert code == 2
        assert report["data"]["error"] == "WitnessException"

    def test_check_array_needs_n(self, tmp_path, run):
        graph, witness = str(tmp_path / "a.gr"), str(tmp_path / "a.json")
        run("--seed", "1", "gen", "array", "--n", "2", "--min-len", "2", "--max-len", "6",
            "--out", graph, "--witness-out", witness)
        assert run("check", "array", "--input", graph, "--witness", witness, "--n", "2")[0] == 0
        assert run("check", "array", "--input", graph, "--witness", witness)[0] == 2


# ============================================================
# Решатели
# ============================================================


class TestSolvers:

    def test_treewidth_and_verify(self, tmp_path, run):
        graph, td = _file(tmp_path, "wall.gr", wall(3)), str(tmp_path / "wall.td")
        code, report = run("tw", "--input", graph, "--decomposition", td)
        assert code == 0
        assert report["data"]["treewidth"] == 3
        code, report = run("verify", "td", "--input", graph, "--decomposition", td)
        assert code == 0
        assert report["data"]["width"] == 3

    def test_match_exit_codes(self, tmp_path, run):
        host = _file(tmp_path, "wall.gr", wall(3))
        triangle = _file(tmp_path, "k3.gr", complete(3))
        assert run("match", "--pattern", triangle, "--host", host)[0] == 1
        code, report = run("match", "--pattern", host, "--host", host)
        assert code == 0
        assert report["data"]["status"] == "found"

    def test_clean(self, tmp_path, run):
        code, report = run("clean", "--t", "3", "--input", _file(tmp_path, "k5.gr", complete(5)))
        assert code == 1
        assert report["data"]["kind"] == "complete"
        assert run("clean", "--t", "3", "--input", _file(tmp_path, "k3.gr", complete(3)))[0] == 0

    def test_block(self, tmp_path, run):
        graph = _file(tmp_path, "k4.gr", complete(4))
        assert run("block", "--input", graph, "--vertices", "0,1,2,3", "--k", "3")[0] == 0
        assert run("block", "--input", graph, "--vertices", "0,1,2,3", "--k", "4")[0] == 1
        assert run("block", "--input", graph, "--vertices", "0,x", "--k", "2")[0] == 2


# ============================================================
# Языки
# ============================================================


class TestLanguages:

    def test_witness_printed_verbatim(self, tmp_path, capsys):
        patterns = tmp_path / "p.txt"
        patterns.write_text("001\n")
        assert main(["lang", "witness", "--patterns", str(patterns), "--c", "1"]) == 1
        assert capsys.readouterr().out == "010\n"

    def test_minimal_c(self, tmp_path, run):
        patterns = tmp_path / "p.txt"
        patterns.write_text("0001\n")
        code, report = run("lang", "unavoidable", "--patterns", str(patterns), "--c", "auto")
        assert code == 0
        assert report["data"]["c_min"] == 3

    def test_brute_force_needs_c(self, tmp_path, run):
        patterns = tmp_path / "p.txt"
        patterns.write_text("0001\n")
        assert run("lang", "unavoidable", "--patterns", str(patterns), "--brute-force")[0] == 2

    def test_tasselled_family(self, tmp_path, run):
        family = tmp_path / "h11"
        run("gen", "hab", "--a", "1", "--b", "1", "--out-dir", str(family))
        code, report = run("lang", "tasselled", "--graphs", str(family), "--oracle-length", "6")
        assert code == 0
        assert report["data"]["c_min"] == 1
        assert report["data"]["oracle"]["all_covered"]


# ============================================================
# Ошибки и приемка
# ============================================================


class TestErrors:

    def test_unknown_command(self):
        assert main(["nope"]) == 2

    def test_missing_file(self, tmp_path, run):
        code, report = run("tw", "--input", str(tmp_path / "missing.gr"))
        assert code == 2
        assert report["exit_code"] == 2

    def test_malformed_file(self, tmp_path, capsys):
        bad = tmp_path / "bad.gr"
        bad.write_text("p tw 2 1\n1 3\n")
        assert main(["tw", "--input", str(bad)]) == 2
        assert "line 2" in capsys.readouterr().err

    def test_unknown_criterion(self, run):
        assert run("verify", "suite", "--only", "99")[0] == 2

    def test_suite_subset(self, run):
        code, report = run("verify", "suite", "--only", "2,10")
        assert code == 0
        assert [c["number"] for c in report["criteria"]] == [2, 10]
