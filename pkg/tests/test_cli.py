"""Tests for the command line and report serialization."""

import io
import json
import math

import pytest

from main import main, parse_arguments
from specsup.cli.reporting import build_report, render_json, round_floats, write_csv
from specsup.construction.families import complete, turan_bipartite
from specsup.enumeration.graph6 import graph6_decode, graph6_encode


def run(capsys, *argv: str) -> tuple[int, str, str]:
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestArguments:
    """Test argument parsing."""

    def test_check_defaults(self):
        """Test check defaults to strict mode without an input file."""
        args = parse_arguments(["check", "P_MANTEL", "--n", "5"])
        assert args.mode == "strict"
        assert args.input is None

    def test_n_list(self):
        """Test comma-separated vertex counts."""
        args = parse_arguments(["check-family", "kplus2-bound", "--n-list", "10,11"])
        assert args.n_list == [10, 11]

    def test_missing_command(self, capsys):
        """Test a missing subcommand is a usage error."""
        assert main([]) == 2

    def test_keyboard_interrupt(self, capsys, mocker):
        """Test Ctrl-C exits with 130."""
        mocker.patch("main.create_runner", side_effect=KeyboardInterrupt)
        assert main(["enumerate", "--n", "3"]) == 130

    def test_internal_error(self, capsys, mocker):
        """Test unexpected exceptions exit with 3."""
        runner = mocker.patch("main.create_runner").return_value
        runner.run.side_effect = RuntimeError("boom")
        assert main(["enumerate", "--n", "3"]) == 3


class TestCommands:
    """Test every subcommand end to end."""

    def test_construct(self, capsys):
        """Test construct emits graph6."""
        code, out, _ = run(capsys, "construct", "kplus2", "--n", "8")
        assert code == 0
        lines = out.split()
        assert len(lines) == 1
        assert graph6_decode(lines[0]).m == 18

    def test_construct_unknown_family(self, capsys):
        """Test an unknown family is a usage error."""
        code, _, _ = run(capsys, "construct", "nope", "--n", "8")
        assert code == 2

    def test_count_csv(self, capsys, graph6_file):
        """Test bowtie counts as CSV."""
        path = graph6_file([graph6_encode(complete(5)), "Bw"])
        code, out, _ = run(capsys, "count", "bowties", "--in", path)
        assert code == 0
        assert out.splitlines() == ["graph6,value", f"{graph6_encode(complete(5))},15", "Bw,0"]

    def test_count_from_stdin(self, capsys, monkeypatch):
        """Test '-' reads graph6 from standard input."""
        monkeypatch.setattr("sys.stdin", io.StringIO("Bw\n"))
        code, out, _ = run(capsys, "count", "triangles")
        assert code == 0
        assert out.splitlines()[1] == "Bw,1"

    def test_bad_graph6(self, capsys, graph6_file):
        """Test unparsable input is a usage error."""
        code, _, _ = run(capsys, "count", "triangles", "--in", graph6_file(["B"]))
        assert code == 2

    def test_spectral_with_quotient(self, capsys, graph6_file):
        """Test lambda and the coarsest quotient of K_5."""
        path = graph6_file([graph6_encode(complete(5))])
        code, out, _ = run(capsys, "spectral", "--quotient", "auto", "--in", path)
        assert code == 0
        record = json.loads(out)["records"][0]
        assert record["lambda"] == pytest.approx(4.0)
        assert record["quotient"]["classes"] == 1
        assert record["quotient"]["largest_root"] == pytest.approx(4.0)

    def test_spectral_bad_partition(self, capsys, graph6_file):
        """Test a non-equitable partition is a usage error."""
        path = graph6_file(["Bg"])
        code, _, _ = run(capsys, "spectral", "--quotient", "0,0,0", "--in", path)
        assert code == 2

    def test_poly_verify(self, capsys):
        """Test f against K^{+2} at n = 10."""
        code, out, _ = run(capsys, "poly", "verify", "--name", "f", "--n", "10")
        assert code == 0
        report = json.loads(out)
        assert report["summary"]["matched"] == 1
        assert report["records"][0]["name"] == "f"

    def test_check(self, capsys):
        """Test Mantel on every graph with 4 vertices."""
        code, out, _ = run(capsys, "check", "P_MANTEL", "--n", "4")
        assert code == 0
        report = json.loads(out)
        assert report["command"] == ["specsup", "check", "P_MANTEL", "--n", "4"]
        assert report["summary"]["graphs_checked"] == 11
        assert "elapsed_seconds" in report["timing"]
        assert set(report) == {"toolVersion", "command", "records", "summary", "timing"}

    def test_check_unknown_predicate(self, capsys):
        """Test an unknown predicate id is a usage error."""
        code, _, _ = run(capsys, "check", "P_NOPE", "--n", "4")
        assert code == 2

    def test_check_needs_source(self, capsys):
        """Test check without --n or --in."""
        code, _, _ = run(capsys, "check", "P_MANTEL")
        assert code == 2

    def test_check_family(self, capsys):
        """Test a family check report."""
        code, out, _ = run(capsys, "check-family", "ynq-bowties", "--n-list", "12")
        assert code == 0
        assert json.loads(out)["summary"]["counts"]["holds"] == 1

    def test_enumerate(self, capsys):
        """Test all 11 graphs on 4 vertices."""
        code, out, _ = run(capsys, "enumerate", "--n", "4")
        assert code == 0
        assert len(out.split()) == 11

    def test_enumerate_too_large(self, capsys):
        """Test the generation limit is a usage error."""
        code, _, _ = run(capsys, "enumerate", "--n", "11")
        assert code == 2

    def test_search(self, capsys, tmp_path):
        """Test a triangle-free search from a config file."""
        config = tmp_path / "search.json"
        config.write_text(
            json.dumps({
                "n": 6,
                "constraints": [{"counter": "triangles", "op": "le", "bound": 0}],
                "schedule": {"steps": 100},
            })
        )
        code, out, _ = run(capsys, "search", "--config", str(config))
        assert code == 0
        record = json.loads(out)["records"][0]
        assert record["best_lambda"] == pytest.approx(3.0)
        assert record["constraint_values"] == {"triangles": 0}

    def test_search_invalid_config(self, capsys, tmp_path):
        """Test a config failing validation is a usage error."""
        config = tmp_path / "search.json"
        config.write_text(json.dumps({"n": 0}))
        code, _, _ = run(capsys, "search", "--config", str(config))
        assert code == 2

    def test_search_single_flip_fixed_edges(self, capsys, tmp_path):
        """Test single-flip moves with a fixed edge count are a usage error."""
        config = tmp_path / "search.json"
        config.write_text(
            json.dumps({"n": 6, "constraints": [{"counter": "edges", "op": "eq", "bound": 9}]})
        )
        code, out, _ = run(capsys, "search", "--config", str(config))
        assert code == 2
        assert out == ""

    def test_probe(self, capsys, graph6_file):
        """Test the probe on K_{4,4}."""
        path = graph6_file([graph6_encode(turan_bipartite(8))])
        code, out, _ = run(capsys, "probe", "--in", path)
        assert code == 0
        assert json.loads(out)["records"][0]["distance"] == 0

    def test_missing_input_file(self, capsys):
        """Test a missing file is a usage error."""
        code, _, _ = run(capsys, "count", "triangles", "--in", "does-not-exist.g6")
        assert code == 2


class TestReporting:
    """Test report serialization helpers."""

    def test_round_floats(self):
        """Test twelve significant digits in nested values."""
        assert round_floats({"a": [1 / 3, 2]}) == {"a": [0.333333333333, 2]}
        assert round_floats(True) is True
        assert round_floats(math.inf) == "inf"

    def test_render_json_sorted_camel_case(self):
        """Test top-level keys are camelCase and sorted."""
        text = render_json(build_report(["specsup"], [{"b": 1, "a": 2}]))
        data = json.loads(text)
        assert data["toolVersion"] == "0.1.0"
        assert list(data["records"][0]) == ["a", "b"]

    def test_write_csv(self):
        """Test the header and row count."""
        stream = io.StringIO()
        assert write_csv(stream, [("Bw", 1), ("Bg", 0.5)]) == 2
        assert stream.getvalue() == "graph6,value\nBw,1\nBg,0.5\n"
