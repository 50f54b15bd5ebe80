#!/usr/bin/env python3
"""
Command-Line Tests
Runs the entry point on the fixture files and checks payloads and exit codes.
"""

import json
import pytest
import sys
from pathlib import Path

# Add src to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from pfss_analyzer.cli.main import EXIT_ERROR, EXIT_OK, EXIT_USAGE, build_parser, main

FIXTURES = Path(__file__).parent.parent / "fixtures"


@pytest.fixture
def run_cli(tmp_path, capsys):
    """Invoke main with a throwaway config and return (exit code, stdout)."""
    def _run(*args):
        argv = ["--config", str(tmp_path / "missing.yaml"), *args]
        code = main(argv)
        return code, capsys.readouterr().out
    return _run


def fixture(name: str) -> str:
    return str(FIXTURES / name)


class TestCommands:
    """One test per subcommand."""

    def test_analyze_text(self, run_cli):
        code, out = run_cli("analyze", fixture("fib_6_1.json"))
        assert code == EXIT_OK
        assert out.startswith("PFSS analysis")
        assert "Possible periods: 1, 3, 9" in out

    def test_orbit_json(self, run_cli):
        code, out = run_cli("--format", "json", "orbit", fixture("fib_6_1.json"), "--x0", "0,0,1")
        payload = json.loads(out)
        assert code == EXIT_OK
        assert payload["length"] == 9
        assert payload["classification"] == "exact"
        assert payload["x0"] == [0, 0, 1]

    def test_orbits_json(self, run_cli):
        code, out = run_cli("--format", "json", "orbits", fixture("supp1.json"))
        payload = json.loads(out)
        assert payload["branch"] == "formula"
        assert payload["closed_orbits"] == [{"count": 1, "length": 1}, {"count": 1, "length": 6}]

    def test_find_init_not_achievable(self, run_cli):
        code, out = run_cli("find-init", fixture("supp1.json"), "--L", "4")
        assert code == EXIT_OK
        assert out.strip() == "Period 4: NOT ACHIEVABLE"

    def test_find_init_json(self, run_cli):
        _, out = run_cli("--format", "json", "find-init", fixture("galois_6_2.json"), "--L", "15")
        payload = json.loads(out)
        assert payload["L"] == 15
        assert len(payload["x0"]) == 3

    def test_root_no_root(self, run_cli):
        code, out = run_cli("--format", "json", "root", fixture("counterexample_4_2.json"))
        payload = json.loads(out)
        assert code == EXIT_OK
        assert payload["status"] == "no-root"
        assert payload["certificate"]["max_block_size"] == 2

    def test_root_of_matrix_file(self, run_cli, tmp_path):
        path = tmp_path / "phi.json"
        path.write_text(json.dumps({"field": {"p": 3}, "matrix": [[1, 1], [0, 1]]}))
        code, out = run_cli("--format", "json", "root", str(path), "--N", "2")
        assert code == EXIT_OK
        assert json.loads(out)["method"] == "hensel"

    def test_root_of_identity(self, run_cli):
        _, out = run_cli("--format", "json", "root", fixture("identity.json"), "--N", "5")
        payload = json.loads(out)
        assert payload["status"] == "root"
        assert payload["matrix"] == [[1, 0], [0, 1]]

    def test_orbit_of_galois_register(self, run_cli):
        _, out = run_cli("--format", "json", "orbit", fixture("galois_6_2.json"), "--x0", "1,0,0")
        assert json.loads(out)["length"] == 15

    def test_simulate(self, run_cli):
        _, out = run_cli("--format", "json", "simulate", fixture("counterexample_4_2.json"),
                         "--x0", "1,0")
        payload = json.loads(out)
        assert payload["period"] == 2
        assert payload["states"] == [[1, 0], [1, 1], [1, 0]]

    def test_fsr_emit_matches_system_fixture(self, run_cli):
        code, out = run_cli("fsr", "emit-pfss", fixture("fib_6_1_pfsr.json"))
        assert code == EXIT_OK
        assert json.loads(out) == json.loads(Path(fixture("fib_6_1.json")).read_text())

    def test_fsr_keystream(self, run_cli):
        _, out = run_cli("--format", "json", "fsr", "keystream", fixture("galois_6_2_pfsr.json"),
                         "--x0", "1,0,0", "--steps", "6", "--tap", "1")
        stream = json.loads(out)
        assert len(stream) == 6
        assert stream[0] == 0


class TestErrors:
    """Exit codes and error payloads."""

    def test_bad_vector(self, run_cli):
        code, out = run_cli("orbit", fixture("fib_6_1.json"), "--x0", "a,b")
        assert code == EXIT_USAGE
        assert json.loads(out)["error"] == "ParseError"

    def test_wrong_vector_length(self, run_cli):
        code, _ = run_cli("orbit", fixture("fib_6_1.json"), "--x0", "1,0")
        assert code == EXIT_USAGE

    def test_matrix_file_needs_index(self, run_cli, tmp_path):
        path = tmp_path / "phi.json"
        path.write_text(json.dumps({"field": {"p": 2}, "matrix": [[1]]}))
        code, out = run_cli("root", str(path))
        assert code == EXIT_USAGE
        assert "--N" in json.loads(out)["message"]

    def test_singular_system(self, run_cli, tmp_path):
        path = tmp_path / "singular.json"
        path.write_text(json.dumps({"field": {"p": 2}, "matrices": [[[1, 0], [0, 0]]]}))
        code, out = run_cli("orbits", str(path))
        assert code == EXIT_ERROR
        assert json.loads(out)["error"] == "SingularSystem"

    def test_missing_input(self, run_cli, tmp_path):
        code, out = run_cli("analyze", str(tmp_path / "absent.json"))
        assert code == EXIT_ERROR
        assert json.loads(out)["error"] == "InputError"

    def test_invalid_json_reports_position(self, run_cli, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text('{\n  "field": {"p": 2},\n  "matrices": [\n}')
        code, out = run_cli("analyze", str(path))
        payload = json.loads(out)
        assert code == EXIT_USAGE
        assert payload["line"] == 4

    def test_missing_subcommand(self):
        with pytest.raises(SystemExit) as info:
            build_parser().parse_args([])
        assert info.value.code == 2
