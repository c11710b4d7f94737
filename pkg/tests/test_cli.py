"""
Tests del CLI apexrandic
========================

Se llama a main(argv) directamente y se lee el reporte desde --output.
"""

import csv
import io
import json
import logging

import pytest

from core.logger import ROOT_LOGGER
from scripts.apexrandic import EXIT_OK, EXIT_USAGE, EXIT_VIOLATION, main


@pytest.fixture(autouse=True)
def quiet_logging():
    root = logging.getLogger(ROOT_LOGGER)
    handler = logging.NullHandler()
    root.addHandler(handler)
    yield
    root.removeHandler(handler)


@pytest.fixture
def graphs_file(tmp_path):
    path = tmp_path / "graphs.g6"
    path.write_text("C~\nEhEG\n", encoding="utf-8")
    return str(path)


def run(tmp_path, *argv, name="out"):
    output = tmp_path / name
    code = main([*argv, "--output", str(output)])
    text = output.read_text(encoding="utf-8") if output.exists() else None
    return code, text


class TestRandic:
    def test_json_report(self, tmp_path, graphs_file):
        code, text = run(tmp_path, "randic", "--input", graphs_file, "--no-timing")
        assert code == EXIT_OK
        payload = json.loads(text)
        assert payload["run"].keys() == {"tool", "version"}
        assert payload["config"]["command"] == "randic"
        assert [entry["value"]["exact"] for entry in payload["report"]] == ["2", "3"]
        assert [entry["line"] for entry in payload["report"]] == [1, 2]
        assert text.endswith("}\n")

    def test_timing_block(self, tmp_path, graphs_file):
        code, text = run(tmp_path, "randic", "--input", graphs_file)
        payload = json.loads(text)
        assert "tool" in payload["run"]

    def test_csv(self, tmp_path, graphs_file):
        code, text = run(tmp_path, "randic", "--input", graphs_file, "--format", "csv")
        assert code == EXIT_OK
        rows = list(csv.reader(io.StringIO(text)))
        assert rows[0][:3] == ["line", "graph6", "n"]
        assert rows[1][1] == "C~"
        assert rows[1][4] == "2"

    def test_parse_error(self, tmp_path, capsys):
        bad = tmp_path / "bad.g6"
        bad.write_text("C~\nC\x01\n", encoding="utf-8")
        code, text = run(tmp_path, "randic", "--input", str(bad))
        assert code == EXIT_USAGE
        assert text is None
        assert "error:" in capsys.readouterr().err

    def test_missing_file(self, tmp_path):
        code, _ = run(tmp_path, "randic", "--input", str(tmp_path / "nope.g6"))
        assert code == EXIT_USAGE

    def test_missing_input_flag(self):
        with pytest.raises(SystemExit) as info:
            main(["randic"])
        assert info.value.code == 2


class TestApex:
    def test_certificates(self, tmp_path, graphs_file):
        code, text = run(tmp_path, "apex", "--input", graphs_file, "--no-timing")
        assert code == EXIT_OK
        first, second = json.loads(text)["report"]
        assert (first["k"], first["witness"], first["residual"]) == (2, [0, 1], "A_")
        assert second["k"] == 1

    def test_disconnected_graph(self, tmp_path):
        path = tmp_path / "edges.txt"
        path.write_text("4 2\n0 1\n2 3\n", encoding="utf-8")
        code, text = run(tmp_path, "apex", "--input", str(path))
        assert code == EXIT_VIOLATION
        [entry] = json.loads(text)["report"]
        assert entry["k"] is None
        assert entry["error"]


class TestAudit:
    def test_lemma5_fails(self, tmp_path):
        code, text = run(tmp_path, "audit", "lemma5", "--grid", "4..30", "--no-timing")
        assert code == EXIT_VIOLATION
        [claim] = json.loads(text)["report"]["claims"]
        assert claim["verdict"] == "fails"
        assert claim["witness"]["x"] == "5"

    def test_lemma2_holds(self, tmp_path):
        code, text = run(tmp_path, "audit", "lemma2", "--grid", "1..20", "--params", "1, 2")
        assert code == EXIT_OK
        payload = json.loads(text)
        assert payload["config"]["params"] == ["1", "2"]

    def test_lemma_without_grid(self, tmp_path):
        code, _ = run(tmp_path, "audit", "lemma3")
        assert code == EXIT_USAGE

    def test_theorem1_small_order(self, tmp_path):
        code, text = run(tmp_path, "audit", "theorem1", "--k", "2", "--n", "4")
        assert code == EXIT_OK
        [witness] = json.loads(text)["report"]["regular_witnesses"]
        assert witness["graph6"] == "C~"

    def test_conjecture_fails_at_seven(self, tmp_path):
        code, text = run(tmp_path, "audit", "conjecture", "--k", "2", "--n", "7", "--no-timing")
        assert code == EXIT_VIOLATION
        report = json.loads(text)["report"]
        assert report["conjecture_holds"] is False
        assert report["comparison"] == "positive"

    def test_output_independent_of_jobs(self, tmp_path):
        argv = ("audit", "corollary2", "--k", "2", "--n", "7", "--m", "2", "--no-timing")
        code_1, serial = run(tmp_path, *argv, "--jobs", "1", name="serial.json")
        code_2, parallel = run(tmp_path, *argv, "--jobs", "2", name="parallel.json")
        assert code_1 == code_2 == EXIT_VIOLATION
        assert serial == parallel

    def test_corollary2_requires_m(self, tmp_path):
        code, _ = run(tmp_path, "audit", "corollary2", "--k", "2", "--n", "7")
        assert code == EXIT_USAGE

    def test_csv_is_rejected(self, tmp_path):
        code, _ = run(tmp_path, "audit", "lemma3", "--grid", "1..5", "--format", "csv")
        assert code == EXIT_USAGE

    def test_scope_error(self, tmp_path):
        code, _ = run(tmp_path, "audit", "conjecture", "--k", "2", "--n", "5")
        assert code == EXIT_USAGE


class TestEnumerate:
    def test_connected_count(self, tmp_path):
        code, text = run(tmp_path, "enumerate", "--n", "5", "--no-timing")
        assert code == EXIT_OK
        report = json.loads(text)["report"]
        assert report["count"] == 21
        assert report["wall_time"] is None

    def test_guard(self, tmp_path, capsys):
        code, _ = run(tmp_path, "enumerate", "--n", "11")
        assert code == EXIT_USAGE
        assert "allow-large" in capsys.readouterr().err

    def test_list(self, tmp_path):
        code, text = run(tmp_path, "enumerate", "--n", "4", "--k", "1", "--list")
        assert code == EXIT_OK
        assert len(text.splitlines()) == 3

    def test_cross_check(self, tmp_path):
        code, text = run(tmp_path, "enumerate", "--n", "5", "--k", "2", "--cross-check", "--format", "csv")
        assert code == EXIT_OK
        rows = list(csv.DictReader(io.StringIO(text)))
        assert rows[0]["strategy"] == "A+B"
        assert rows[0]["count_a"] == rows[0]["count_b"] == rows[0]["count"]

    def test_invalid_jobs(self, tmp_path):
        code, _ = run(tmp_path, "enumerate", "--n", "4", "--jobs", "0")
        assert code == EXIT_USAGE


class TestScanPlot:
    def test_rows(self, tmp_path):
        code, text = run(tmp_path, "scan-plot", "--k", "2", "--n-range", "6..7")
        assert code == EXIT_VIOLATION
        rows = list(csv.DictReader(io.StringIO(text)))
        assert [row["n"] for row in rows] == ["6", "7"]
        assert [row["conjecture"] for row in rows] == ["n/a", "fails"]
        assert rows[1]["gap_to_bound"].startswith("-")

    def test_empty_range(self, tmp_path):
        code, text = run(tmp_path, "scan-plot", "--k", "2", "--n-range", "9..8")
        assert code == EXIT_OK
        assert text == "n,count,max_R,extremal_value,gap_to_bound,conjecture\n"

    def test_bad_range(self, tmp_path):
        code, _ = run(tmp_path, "scan-plot", "--k", "2", "--n-range", "x..7")
        assert code == EXIT_USAGE
