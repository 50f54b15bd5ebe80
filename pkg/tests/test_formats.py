#!/usr/bin/env python3
"""
Unit Tests for JSON Codecs and Text Reports
"""

import json
import pytest
import sys
from pathlib import Path

# Add src to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from pfss_analyzer.algebra.field import FieldCtx, prime_field
from pfss_analyzer.core.config import RunConfig
from pfss_analyzer.core.exceptions import InputError, NotIrreducible, ParseError
from pfss_analyzer.formats import codec
from pfss_analyzer.formats.report import render_initial_condition, render_report, render_vector
from pfss_analyzer.systems.analysis import analyze
from pfss_analyzer.systems.fsr import build_pfss
from pfss_analyzer.systems.pfss import Pfss, monodromy

FIXTURES = Path(__file__).parent.parent / "fixtures"


@pytest.fixture
def gf64():
    return FieldCtx(2, ((1, 1, 1), (2, 0, 0, 1)))


class TestElements:
    """Element and field encoding."""

    def test_small_fields_use_codes(self):
        gf4 = FieldCtx(2, ((1, 1, 1),))
        assert codec.element_to_json(gf4, 3) == 3

    def test_tower_elements_nest(self, gf64):
        assert codec.element_to_json(gf64, 4) == [0, 1, 0]
        assert codec.element_from_json(gf64, [0, 1, 0]) == 4
        assert codec.element_from_json(gf64, 4) == 4

    def test_out_of_range(self):
        with pytest.raises(ParseError):
            codec.element_from_json(prime_field(5), 5)
        with pytest.raises(ParseError):
            codec.element_from_json(prime_field(5), True)
        with pytest.raises(ParseError):
            codec.element_from_json(prime_field(5), [1, 2])

    def test_field_description(self, gf64):
        assert codec.field_to_json(gf64) == {"p": 2, "tower": [[1, 1, 1], [2, 0, 0, 1]]}
        assert codec.field_from_json({"p": 2, "tower": [[1, 1, 1], [2, 0, 0, 1]]}) == gf64

    def test_reducible_tower_step(self):
        with pytest.raises(NotIrreducible):
            codec.field_from_json({"p": 2, "tower": [[1, 0, 1]]})

    def test_composite_characteristic(self):
        with pytest.raises(ParseError):
            codec.field_from_json({"p": 4})


class TestSystems:
    """System and register files."""

    def test_load_fixture(self):
        system = codec.load_system(FIXTURES / "fib_6_1.json")
        assert system.period == 3
        assert system.n == 3

    def test_system_json_is_stable(self):
        system = codec.load_system(FIXTURES / "galois_6_2.json")
        assert codec.system_from_json(codec.system_to_json(system)) == system

    def test_period_mismatch(self):
        obj = {"field": {"p": 2}, "period": 3, "matrices": [[[1]]]}
        with pytest.raises(ParseError):
            codec.system_from_json(obj)

    def test_missing_key(self):
        with pytest.raises(ParseError):
            codec.system_from_json({"field": {"p": 2}})

    def test_ragged_matrix(self):
        obj = {"field": {"p": 2}, "matrices": [[[1, 0], [1]]]}
        with pytest.raises(ParseError):
            codec.system_from_json(obj)

    def test_schema_version(self):
        obj = {"schema": 99, "field": {"p": 2}, "matrices": [[[1]]]}
        with pytest.raises(ParseError):
            codec.system_from_json(obj)

    def test_syntax_error_position(self):
        with pytest.raises(ParseError) as info:
            codec.parse_json('{\n  "field": }')
        assert info.value.line == 2

    def test_missing_file(self, tmp_path):
        with pytest.raises(InputError):
            codec.load_system(tmp_path / "absent.json")

    def test_register_fixtures_emit_system_fixtures(self):
        for register, system in (("fib_6_1_pfsr.json", "fib_6_1.json"),
                                 ("galois_6_2_pfsr.json", "galois_6_2.json")):
            built = build_pfss(codec.load_pfsr(FIXTURES / register))
            assert built == codec.load_system(FIXTURES / system)

    def test_bad_wiring_entry(self):
        obj = json.loads((FIXTURES / "fib_6_1_pfsr.json").read_text())
        obj["wiring"][0] = {"tap": 1}
        with pytest.raises(ParseError):
            codec.pfsr_from_json(obj)

    def test_matrix_file(self, tmp_path):
        path = tmp_path / "phi.json"
        path.write_text(json.dumps({"field": {"p": 3}, "matrix": [[1, 2], [0, 1]]}))
        assert codec.load_matrix(path).rows == ((1, 2), (0, 1))
        system = codec.load_system(FIXTURES / "counterexample_4_2.json")
        assert codec.load_matrix(FIXTURES / "counterexample_4_2.json") == monodromy(system)


class TestReports:
    """Report payloads and text rendering."""

    def test_report_json(self):
        report = analyze(codec.load_system(FIXTURES / "supp1.json"))
        out = codec.report_to_json(report)
        assert out["root"]["status"] == "root"
        assert out["orbits"]["branch"] == "formula"
        assert out["orbits"]["histogram"] == [{"length": 1, "count": 1}, {"length": 6, "count": 3}]
        assert out["lfss_cycle_set"] == [{"count": 1, "length": 1}, {"count": 1, "length": 3}]
        json.loads(codec.dumps(out))

    def test_no_root_json(self):
        report = analyze(codec.load_system(FIXTURES / "counterexample_4_2.json"))
        out = codec.report_to_json(report)
        assert out["root"]["status"] == "no-root"
        assert out["root"]["certificate"]["p"] == 2
        assert out["floquet"] is None

    @pytest.mark.parametrize("name", sorted(p.name for p in FIXTURES.glob("*.json")))
    def test_report_round_trip(self, name):
        obj = codec.load_json(FIXTURES / name)
        system = build_pfss(codec.pfsr_from_json(obj)) if "kind" in obj else codec.system_from_json(obj)
        report = analyze(system)
        text = codec.dumps(codec.report_to_json(report))
        assert codec.report_from_json(codec.parse_json(text)) == report

    def test_round_trip_with_extension_counts(self):
        eye = [[1, 0], [0, 1]]
        report = analyze(Pfss.from_lists(prime_field(2), [[[0, 1], [1, 1]], eye, eye]))
        assert report.orbits.extension_ctx is not None
        out = codec.report_to_json(report)
        assert out["orbits"]["extension"]["field"] == codec.field_to_json(report.orbits.extension_ctx)
        assert codec.report_from_json(json.loads(codec.dumps(out))) == report

    def test_round_trip_with_undetermined_root(self):
        system = codec.load_system(FIXTURES / "fib_6_1.json")
        report = analyze(system, RunConfig(cap_extension=2))
        decoded = codec.report_from_json(codec.parse_json(codec.dumps(codec.report_to_json(report))))
        assert decoded.root == report.root
        assert decoded == report

    def test_report_missing_field(self):
        out = codec.report_to_json(analyze(codec.load_system(FIXTURES / "supp1.json")))
        del out["monodromy"]
        with pytest.raises(ParseError):
            codec.report_from_json(out)

    def test_text_report(self):
        report = analyze(codec.load_system(FIXTURES / "fib_6_1.json"))
        text = render_report(report)
        assert "Field: GF(2)" in text
        assert "Possible periods: 1, 3, 9" in text
        assert "GF(2^6)" in text

    def test_render_helpers(self, gf64):
        assert render_vector(gf64, (0, 4, 3)) == "[0, b, a + 1]"
        assert render_initial_condition(prime_field(2), 4, None) == "Period 4: NOT ACHIEVABLE"

    def test_dumps_is_sorted(self):
        assert codec.dumps({"b": 1, "a": 2}, None) == '{"a": 2, "b": 1}'
