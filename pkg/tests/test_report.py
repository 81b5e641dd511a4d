"""Report entries, stable serialization, and figure rendering."""

import json
from fractions import Fraction

import pytest

from asmkit.report import (
    CheckEntry,
    VerificationReport,
    emit_report,
    make_entry,
    render_figures,
    render_params,
    render_value,
)


class TestRendering:
    def test_scalars(self):
        assert render_value(3) == "3"
        assert render_value(-12) == "-12"
        assert render_value(Fraction(22, 8)) == "11/4"
        assert render_value(True) == "true"
        assert render_value(False) == "false"
        assert render_value(None) == ""
        assert render_value("already text") == "already text"

    def test_containers(self):
        assert render_value((1, 2)) == "(1, 2)"
        assert render_value([Fraction(1, 2), None]) == "(1/2, )"
        assert render_value({"b": 2, "a": 1}) == "{a: 1, b: 2}"

    def test_render_method_objects(self):
        class Fake:
            def render(self):
                return "x^2 - 1"

        assert render_value(Fake()) == "x^2 - 1"

    def test_params_sorted(self):
        assert render_params({"t": 2, "s": Fraction(1, 3)}) == (
            ("s", "1/3"), ("t", "2"))


class TestEntries:
    def test_bad_status_rejected(self):
        with pytest.raises(ValueError):
            CheckEntry("x", (), "maybe", "1", "1")

    def test_make_entry_renders_everything(self):
        e = make_entry("check", {"n": 3}, "pass", Fraction(7, 2), 7,
                       witness=(1, 2), elapsed_ms=5)
        assert e.params == (("n", "3"),)
        assert e.expected == "7/2"
        assert e.actual == "7"
        assert e.witness == "(1, 2)"
        assert e.elapsed_ms == 5

    def test_sorted_on_construction_and_extend(self):
        a = make_entry("b-check", {}, "pass", 1, 1)
        b = make_entry("a-check", {"n": 2}, "pass", 1, 1)
        c = make_entry("a-check", {"n": 10}, "pass", 1, 1)
        rep = VerificationReport([a, b])
        rep.extend([c])
        # "10" sorts before "2" as text: rendered params are the sort key
        assert [e.check_id for e in rep.entries] == [
            "a-check", "a-check", "b-check"]
        assert rep.entries[0].params == (("n", "10"),)

    def test_counts_and_failures(self):
        rep = VerificationReport([
            make_entry("a", {}, "pass", 1, 1),
            make_entry("b", {}, "finding", 1, 0),
        ])
        assert rep.counts() == {"pass": 1, "fail": 0, "finding": 1}
        assert not rep.has_failures()
        rep.extend([make_entry("c", {}, "fail", 1, 2)])
        assert rep.has_failures()


class TestSerialization:
    def test_empty_json_exact_bytes(self):
        assert VerificationReport([]).to_json() == '{"entries":[]}'

    def test_single_entry_has_all_six_fields(self):
        rep = VerificationReport([make_entry("c", {"n": 1}, "pass", 2, 2)])
        row = json.loads(rep.to_json())["entries"][0]
        assert sorted(row) == ["actual", "check_id", "expected", "params",
                               "status", "witness"]
        assert row["witness"] is None

    def test_timing_never_serialized(self):
        rep = VerificationReport(
            [make_entry("c", {}, "pass", 1, 1, elapsed_ms=999)])
        assert "999" not in rep.to_json()
        assert "999" not in rep.to_csv()
        assert rep.total_elapsed_ms() == 999

    def test_csv_golden(self):
        rep = VerificationReport([
            make_entry("c", {"n": 2, "d": 1}, "fail", 3, 4,
                       witness="(0, 1)"),
        ])
        assert rep.to_csv() == (
            "check_id,params,status,expected,actual,witness\n"
            'c,d=1;n=2,fail,3,4,"(0, 1)"\n')

    def test_text_has_summary_line(self):
        rep = VerificationReport([
            make_entry("c", {"n": 1}, "pass", 1, 1),
            make_entry("d", {}, "finding", True, False, witness="w"),
        ])
        text = rep.to_text()
        assert text.endswith("2 checks: 1 pass, 0 fail, 1 finding\n")
        assert "FINDING d" in text

    def test_emit_report_formats(self, tmp_path):
        rep = VerificationReport([make_entry("c", {}, "pass", 1, 1)])
        for fmt in ("json", "csv", "text"):
            path = tmp_path / f"out.{fmt}"
            emit_report(rep, fmt, str(path))
            assert path.read_text()
        with pytest.raises(ValueError):
            emit_report(rep, "xml", str(tmp_path / "out.xml"))


class TestFigures:
    def test_two_pngs_next_to_the_report(self, tmp_path):
        rep = VerificationReport([
            make_entry("c", {"n": 1}, "pass", 1, 1),
            make_entry("c", {"n": 2}, "fail", 1, 2),
            make_entry("d", {}, "finding", True, True),
        ])
        base = tmp_path / "rep.json"
        emit_report(rep, "json", str(base))
        written = render_figures(rep, str(base))
        assert written == [str(tmp_path / "rep_status.png"),
                           str(tmp_path / "rep_checks.png")]
        for p in written:
            with open(p, "rb") as fh:
                assert fh.read(8) == b"\x89PNG\r\n\x1a\n"
