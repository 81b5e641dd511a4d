"""Command-line surface: subcommands, exit codes, file outputs."""

import json

import pytest

from asmkit.cli import THREADS_ENV, _threads, main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestThreads:
    def test_flag_wins(self, monkeypatch):
        monkeypatch.setenv(THREADS_ENV, "7")
        assert _threads(3) == 3

    def test_env_fallback(self, monkeypatch):
        monkeypatch.setenv(THREADS_ENV, "2")
        assert _threads(None) == 2

    def test_env_must_be_integer(self, monkeypatch):
        monkeypatch.setenv(THREADS_ENV, "many")
        with pytest.raises(SystemExit):
            _threads(None)

    def test_default_is_positive(self, monkeypatch):
        monkeypatch.delenv(THREADS_ENV, raising=False)
        assert _threads(None) >= 1


class TestCount:
    def test_plain_count(self, capsys):
        code, out, _ = run_cli(capsys, "count", "mt", "--bottom", "1,2,3")
        assert code == 0 and out == "7\n"

    def test_top_filter(self, capsys):
        code, out, _ = run_cli(capsys, "count", "mt", "--bottom", "1,2,3",
                               "--top", "2")
        assert code == 0 and out == "3\n"

    def test_left_eq_filter(self, capsys):
        total = 0
        for d in (1, 2, 3):
            code, out, _ = run_cli(capsys, "count", "mt",
                                   "--bottom", "1,2,3",
                                   "--left-eq", str(d))
            assert code == 0
            total += int(out)
        assert total == 7

    def test_patterns_listing(self, capsys):
        code, out, _ = run_cli(capsys, "count", "mt", "--bottom", "1,2",
                               "--patterns")
        lines = out.strip().split("\n")
        assert code == 0
        assert lines[-1] == "2"
        assert "1 | 1,2" in lines and "2 | 1,2" in lines

    def test_bad_bottom(self, capsys):
        with pytest.raises(SystemExit):
            main(["count", "mt", "--bottom", "1,x"])


class TestNumbers:
    def test_family_b_table(self, capsys):
        code, out, _ = run_cli(capsys, "numbers", "--family", "B",
                               "--n", "3")
        assert code == 0
        assert out == "1\t3\n2\t9\n3\t14\n"

    def test_family_c_is_index_symmetric(self, capsys):
        code, out, _ = run_cli(capsys, "numbers", "--family", "C",
                               "--n", "3", "--d", "2")
        rows = dict(line.split("\t") for line in out.strip().split("\n"))
        assert code == 0
        assert rows["0"] == rows["-1"] and rows["2"] == rows["-3"]

    def test_unknown_family_rejected(self, capsys):
        with pytest.raises(SystemExit):
            main(["numbers", "--family", "E", "--n", "2"])


class TestVerify:
    def test_green_suite_exits_zero(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "cd", "--n", "2")
        assert code == 0
        assert out.splitlines()[-1].endswith("0 fail, 0 finding")

    def test_findings_do_not_fail_the_run(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "conjecture-1",
                               "--max-vars", "2")
        assert code == 0
        assert "FINDING" in out

    def test_family_filter_restricts_entries(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "les", "--n", "4",
                               "--family", "B")
        assert code == 0
        assert "family=A" not in out and "family=B;" in out

    def test_timing_goes_to_stderr(self, capsys):
        code, out, err = run_cli(capsys, "verify", "cd", "--n", "2",
                                 "--timing")
        assert code == 0
        assert "total:" in err and "total:" not in out

    def test_unknown_suite_rejected(self, capsys):
        with pytest.raises(SystemExit):
            main(["verify", "everything"])


class TestReport:
    def test_writes_delimited_files_and_figures(self, tmp_path, capsys):
        jpath = tmp_path / "r.json"
        cpath = tmp_path / "r.csv"
        code, out, _ = run_cli(
            capsys, "report", "cd", "--n", "2",
            "--json", str(jpath), "--csv", str(cpath))
        assert code == 0
        data = json.loads(jpath.read_text())
        assert data["entries"]
        assert cpath.read_text().startswith(
            "check_id,params,status,expected,actual,witness\n")
        for stem in ("r_status.png", "r_checks.png"):
            png = tmp_path / stem
            assert png.exists()
            assert str(png) in out

    def test_needs_an_output_path(self, capsys):
        with pytest.raises(SystemExit):
            main(["report", "cd"])

    def test_thread_count_keeps_bytes_identical(self, tmp_path, capsys):
        texts = []
        for threads in ("1", "2"):
            path = tmp_path / f"t{threads}.json"
            code, _, _ = run_cli(
                capsys, "report", "les", "--n", "3", "--depth", "2",
                "--threads", threads, "--json", str(path))
            assert code == 0
            texts.append(path.read_text())
        assert texts[0] == texts[1]
