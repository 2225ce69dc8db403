import csv
import json

import pytest

from fubini.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


class TestSchubertCommand:
    def test_word_json(self, capsys):
        code, out = run(capsys, "schubert", "--word", "2113", "--k", "3")
        assert code == 0
        assert json.loads(out) == [
            [[2, 0, 0, 0], "1"],
            [[1, 1, 0, 0], "1"],
            [[1, 0, 1, 0], "1"],
        ]

    def test_word_ascii(self, capsys):
        code, out = run(capsys, "schubert", "--word", "2113", "--k", "3", "--format", "ascii")
        assert out.strip() == "x1^2 + x1*x2 + x1*x3"

    def test_perm(self, capsys):
        code, out = run(capsys, "schubert", "--perm", "132", "--format", "ascii")
        assert out.strip() == "x1 + x2"

    def test_latex(self, capsys):
        code, out = run(capsys, "schubert", "--word", "211", "--k", "2", "--format", "latex")
        assert out.strip() == "x_{1}"

    def test_missing_flags(self, capsys):
        with pytest.raises(SystemExit) as err:
            main(["schubert", "--word", "211"])
        assert err.value.code == 2


class TestHilbertCommand:
    def test_golden(self, capsys):
        code, out = run(capsys, "hilbert", "--ring", "R", "--n", "3", "--k", "2")
        assert code == 0
        assert json.loads(out) == [1, 3, 2]

    def test_csv(self, capsys):
        code, out = run(capsys, "hilbert", "--ring", "T", "--n", "2", "--k", "2", "--r", "1", "--format", "csv")
        rows = list(csv.reader(out.strip().splitlines()))
        assert rows[0] == ["degree", "dimension"]
        assert rows[1:] == [["0", "1"], ["1", "2"], ["2", "2"], ["3", "1"]]

    def test_rs_ring(self, capsys):
        code, out = run(capsys, "hilbert", "--ring", "Rs", "--n", "2", "--k", "2", "--s", "1")
        assert json.loads(out) == [1, 2]


class TestExpandCommand:
    def test_golden(self, capsys):
        code, out = run(capsys, "expand", "--n", "4", "--k", "3", "--u", "1123", "--v", "1232")
        assert code == 0
        assert json.loads(out) == {"1132": -1, "2213": 2}

    def test_deterministic(self, capsys):
        _, first = run(capsys, "expand", "--n", "3", "--k", "2", "--u", "112", "--v", "121")
        _, second = run(capsys, "expand", "--n", "3", "--k", "2", "--u", "112", "--v", "121")
        assert first == second


class TestNfCommand:
    def test_generator_reduces_to_zero(self, capsys):
        poly = json.dumps([[[2, 0, 0], "1"]])  # x1^2 in R(3,2)
        code, out = run(capsys, "nf", "--n", "3", "--k", "2", "--poly", poly)
        assert json.loads(out) == []

    def test_schubert_word_input(self, capsys):
        code, out = run(capsys, "nf", "--n", "3", "--k", "2", "--schubert-word", "111")
        assert json.loads(out) == []


class TestWordsCommand:
    def test_enumeration(self, capsys):
        code, out = run(capsys, "words", "--n", "3", "--k", "2")
        data = json.loads(out)
        assert data["count"] == 6
        assert data["words"][0] == {"word": "112", "dim": 1}

    def test_mahonian(self, capsys):
        code, out = run(capsys, "words", "--n", "3", "--k", "2", "--mahonian")
        assert json.loads(out) == [2, 3, 1]

    def test_tail_family(self, capsys):
        code, out = run(capsys, "words", "--n", "2", "--k", "2", "--family", "tail", "--r", "1")
        assert json.loads(out)["count"] == 6


class TestCellsCommand:
    def test_ascii(self, capsys):
        code, out = run(capsys, "cells", "--word", "2331231", "--k", "3", "--format", "ascii")
        assert out == ". . . 1 . . 1\n1 * * . 1 * *\n. 1 1 . . 1 *\n"

    def test_json_payload(self, capsys):
        code, out = run(capsys, "cells", "--word", "441122", "--k", "4", "--omega")
        data = json.loads(out)
        assert data["cells"] == [
            "441121",
            "441122",
            "441124",
            "441421",
            "441422",
            "441424",
        ]
        # dim U(441122) = 5 free positions, plus 4 stars in the pattern
        assert data["cell_dimension"] == 9


class TestFieldlabCommand:
    def test_report(self, capsys):
        code, out = run(capsys, "fieldlab", "--n", "3", "--k", "2", "--p", "2", "--verify-orbits")
        assert code == 0
        data = json.loads(out)
        assert data["Y"] == {"closed_form": 12, "enumerated": 12, "match": True}
        assert data["X"]["match"] and data["orbits_free"]


class TestStabilityCommand:
    def test_word_checks(self, capsys):
        code, out = run(capsys, "stability", "--word", "2123", "--k", "3", "--steps", "2")
        assert code == 0
        data = json.loads(out)
        assert data["append_embedding_invariant"]
        assert data["reversal_restriction_invariant"]
        assert len(data["reversed_tower"]) == 3

    def test_perm_report(self, capsys):
        code, out = run(capsys, "stability", "--perm", "21", "--steps", "1")
        data = json.loads(out)
        assert data["stable"] == [[[1, 0, 0], "1"], [[0, 1, 0], "1"]]
        assert data["flagged_monomials"] == [[0, 0, 1]]


class TestBasisCommand:
    def test_r32(self, capsys):
        code, out = run(capsys, "basis", "--n", "3", "--k", "2")
        data = [tuple(m) for m in json.loads(out)]
        assert len(data) == 6
        assert (0, 0, 0) in data


class TestFrobeniusCommand:
    def test_r(self, capsys):
        code, out = run(capsys, "frobenius", "--n", "3", "--k", "2")
        data = json.loads(out)
        assert data["schur"] == [[[2, 1], [0, 1, 1]], [[3], [1, 1]]]
        assert data["hilbert"] == [1, 3, 2]

    def test_t(self, capsys):
        code, out = run(capsys, "frobenius", "--n", "2", "--k", "2", "--ring", "T", "--r", "1")
        assert json.loads(out)["hilbert"] == [1, 2, 2, 1]


class TestReportCommand:
    def test_writes_files(self, capsys, tmp_path):
        code, out = run(capsys, "report", "--n", "3", "--k", "2", "--outdir", str(tmp_path))
        assert code == 0
        paths = out.strip().splitlines()
        assert len(paths) == 4
        with open(tmp_path / "mahonian_n3_k2.csv") as fh:
            rows = list(csv.reader(fh))
        assert rows == [["dimension", "words"], ["0", "2"], ["1", "3"], ["2", "1"]]
        assert (tmp_path / "mahonian_n3_k2.png").stat().st_size > 0
        assert (tmp_path / "hilbert_R_n3_k2.png").stat().st_size > 0


class TestExpandTable:
    def test_csv_table(self, capsys):
        code, out = run(capsys, "expand", "--n", "3", "--k", "2", "--table", "--format", "csv")
        assert code == 0
        rows = list(csv.reader(out.strip().splitlines()))
        assert rows[0] == ["u\\v", "112", "121", "122", "211", "212", "221"]
        by_u = {r[0]: r[1:] for r in rows[1:]}
        # the unit class row reproduces the column labels
        assert by_u["122"] == ["1*112", "1*121", "1*122", "1*211", "1*212", "1*221"]

    def test_requires_pair_without_table(self):
        with pytest.raises(SystemExit):
            main(["expand", "--n", "3", "--k", "2"])


class TestFieldlabCountAction:
    def test_count_positional(self, capsys):
        code, out = run(capsys, "fieldlab", "count", "--n", "2", "--k", "2", "--p", "2")
        assert code == 0
        assert json.loads(out)["Y"]["match"]


class TestBadFlags:
    def test_unknown_command(self):
        with pytest.raises(SystemExit) as err:
            main(["frobble"])
        assert err.value.code == 2

    def test_missing_required(self):
        with pytest.raises(SystemExit) as err:
            main(["hilbert", "--n", "3"])
        assert err.value.code == 2
