import json

import pytest

from starfree import gallery
from starfree.automata import automaton_from_doc, automaton_to_doc
from starfree.cli import main


def write_automaton(path, auto):
    path.write_text(json.dumps(automaton_to_doc(auto)))
    return str(path)


@pytest.fixture
def c3_file(tmp_path):
    from starfree import families

    return write_automaton(tmp_path / "c3.json", families.build("C", 3))


class TestClassify:
    def test_text(self, capsys, c3_file):
        assert main(["classify", c3_file]) == 0
        out = capsys.readouterr().out
        assert "monotonic:             no" in out
        assert "nearly monotonic:      yes" in out
        assert "star-free:             yes" in out
        assert "removed letters: e" in out

    def test_json_matches_text_data(self, capsys, c3_file):
        assert main(["classify", c3_file, "--format", "json"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["monotonic"] is False
        assert doc["partially_monotonic"] is False
        assert doc["nearly_monotonic"] is True
        assert doc["star_free"] is True
        assert doc["removed_letters"] == ["e"]
        assert doc["nearly_order"] == [1, 2]


class TestReport:
    def test_text(self, capsys, c3_file):
        assert main(["report", c3_file]) == 0
        out = capsys.readouterr().out
        assert "kappa = 3" in out and "sigma = 10" in out and "mu    = 10" in out

    def test_json(self, capsys, c3_file):
        assert main(["report", c3_file, "--format", "json"]) == 0
        assert json.loads(capsys.readouterr().out) == {"kappa": 3, "sigma": 10, "mu": 10}


class TestClosure:
    def test_monotonic_three_closure(self, capsys):
        code = main(["closure", "[1,1,2]", "[2,2,3]", "[1,3,3]", "[1,2,3]"])
        assert code == 0
        out = capsys.readouterr().out
        assert "size 10" in out
        assert "[3,3,3]" in out

    def test_json_size(self, capsys):
        assert main(["closure", "--format", "json", "[_,1]", "[2,_]"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["size"] == len(doc["elements"])

    def test_parse_error_exit_code(self, capsys):
        assert main(["closure", "[0,1]"]) == 4


class TestFamily:
    def test_emits_valid_document(self, capsys):
        assert main(["family", "A", "3"]) == 0
        doc = json.loads(capsys.readouterr().out)
        auto = automaton_from_doc(doc)
        assert auto.n == 3 and auto.alphabet == ("a", "b1", "b2", "c")

    def test_output_file_round_trips(self, tmp_path, capsys):
        target = tmp_path / "b2.json"
        assert main(["family", "B", "2", "-o", str(target)]) == 0
        doc = json.loads(target.read_text())
        assert doc["delta"]["a"] == ["_", 1]
        assert main(["classify", str(target)]) == 0

    def test_unknown_tag_is_usage_error(self, capsys):
        assert main(["family", "Z", "3"]) == 2

    def test_out_of_range_is_usage_error(self, capsys):
        assert main(["family", "C", "1"]) == 2


class TestOps:
    def test_union_then_classify(self, tmp_path, capsys):
        one = write_automaton(tmp_path / "one.json", gallery.union_operand_one())
        two = write_automaton(tmp_path / "two.json", gallery.union_operand_two())
        merged = tmp_path / "union.json"
        assert main(["op", "union", one, two, "-o", str(merged)]) == 0
        assert main(["classify", str(merged), "--format", "json"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["star_free"] is True and doc["nearly_monotonic"] is False

    def test_concat(self, tmp_path, capsys):
        one = write_automaton(tmp_path / "one.json", gallery.concat_operand_one())
        two = write_automaton(tmp_path / "two.json", gallery.concat_operand_two())
        assert main(["op", "concat", one, two]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["states"] == 6

    def test_star_and_complement(self, tmp_path, capsys):
        aa = write_automaton(tmp_path / "aa.json", gallery.double_a())
        assert main(["op", "star", aa]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["states"] == 2
        assert main(["op", "complement", aa]) == 0

    def test_quotient_needs_word(self, tmp_path, capsys):
        one = write_automaton(tmp_path / "one.json", gallery.union_operand_one())
        assert main(["op", "quotient", one]) == 2
        assert main(["op", "quotient", one, "-w", "a"]) == 0

    def test_wrong_arity(self, tmp_path, capsys):
        one = write_automaton(tmp_path / "one.json", gallery.union_operand_one())
        assert main(["op", "union", one]) == 2
        assert main(["op", "star", one, one]) == 2

    def test_alphabet_mismatch_is_io_error(self, tmp_path, capsys):
        one = write_automaton(tmp_path / "one.json", gallery.union_operand_one())
        aa = write_automaton(tmp_path / "aa.json", gallery.double_a())
        assert main(["op", "union", one, aa]) == 4


class TestSearch:
    def test_small_cell(self, capsys):
        assert main(["search", "3", "2"]) == 0
        out = capsys.readouterr().out
        assert "best size 7" in out
        assert "matches the recorded reference value 7" in out

    def test_json(self, capsys):
        assert main(["search", "2", "2", "--format", "json"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["best_size"] == 2 and doc["reference"] == 2

    def test_budget_exit_code(self, capsys):
        assert main(["search", "5", "3"]) == 3

    def test_checkpoint_and_workers(self, tmp_path, capsys):
        cursor = tmp_path / "cursor.json"
        code = main(["search", "3", "2", "--checkpoint", str(cursor), "--workers", "2"])
        assert code == 0
        assert json.loads(cursor.read_text())["n"] == 3


class TestConflicts:
    def test_text_table(self, capsys):
        assert main(["conflicts", "3"]) == 0
        out = capsys.readouterr().out
        assert "12 transformations, 12 conflicting pairs" in out
        assert "max conflict-free set: 6" in out
        assert "331*" in out  # a conflicting product in the grid

    def test_json(self, capsys):
        assert main(["conflicts", "3", "--format", "json"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert len(doc["nodes"]) == 12
        assert len(doc["edges"]) == 12
        assert doc["derived_bound"] == 10

    def test_out_of_range(self, capsys):
        assert main(["conflicts", "9"]) == 2


class TestTables:
    def test_text(self, capsys):
        assert main(["tables", "--max-n", "6"]) == 0
        out = capsys.readouterr().out
        assert "462" in out and "1007" in out and "16807" in out

    def test_json(self, capsys):
        assert main(["tables", "--max-n", "6", "--format", "json"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["monotonic"] == [1, 3, 10, 35, 126, 462]
        assert doc["completed-monotonic"] == [None, 2, 8, 38, 192, 1002]
        assert doc["nearly-monotonic"] == [None, 3, 10, 41, 196, 1007]
        assert doc["aperiodic"] == [1, 3, 16, 125, 1296, 16807]


class TestVerify:
    def test_quick_sweep_passes(self, capsys):
        assert main(["verify", "--quick"]) == 0
        out = capsys.readouterr().out
        assert "FAIL" not in out
        assert "15/15 checks passed" in out


class TestUsageAndIo:
    def test_missing_file(self, capsys):
        assert main(["report", "/nonexistent/automaton.json"]) == 4

    def test_bad_json(self, tmp_path, capsys):
        bad = tmp_path / "bad.json"
        bad.write_text("{nope")
        assert main(["classify", str(bad)]) == 4

    def test_bad_document(self, tmp_path, capsys):
        bad = tmp_path / "bad.json"
        bad.write_text(json.dumps({"states": 1}))
        assert main(["classify", str(bad)]) == 4

    def test_unknown_command(self, capsys):
        assert main(["frobnicate"]) == 2

    def test_missing_argument(self, capsys):
        assert main(["classify"]) == 2

    def test_help_exits_zero(self, capsys):
        assert main(["--help"]) == 0
