"""The command line front end, run in-process via main()."""

from __future__ import annotations

from pathlib import Path

import pytest

from wgnfa import format_gnfa
from wgnfa.cli import main

GOLDEN = Path(__file__).resolve().parent / "golden"


@pytest.fixture()
def gnfa_file(tmp_path, ten_state):
    path = tmp_path / "ten.gnfa"
    path.write_text(format_gnfa(ten_state))
    return path


@pytest.fixture()
def four_file(tmp_path, four_state):
    path = tmp_path / "four.gnfa"
    path.write_text(format_gnfa(four_state))
    return path


@pytest.fixture()
def index_file(tmp_path, gnfa_file):
    out = tmp_path / "ten.wgx"
    assert main(["build", str(gnfa_file), "-o", str(out)]) == 0
    return out


def test_build_and_query(tmp_path, index_file, capsys):
    pats = tmp_path / "p.txt"
    pats.write_text("cba\na\n")
    capsys.readouterr()
    assert main(["query", str(index_file), "--patterns", str(pats)]) == 0
    out = capsys.readouterr().out
    assert out.splitlines() == [
        "cba\t3\t2\t0\t\t-",
        "a\t2\t5\t4\t2,3,4,5\t-",
    ]


def test_query_empty_pattern_row(tmp_path, index_file, capsys):
    pats = tmp_path / "p.txt"
    pats.write_text("\n")
    capsys.readouterr()
    assert main(["query", str(index_file), "--patterns", str(pats)]) == 0
    out = capsys.readouterr().out
    assert out == "@e\t1\t10\t10\t1,2,3,4,5,6,7,8,9,10\t-\n"


def test_query_trace_output(tmp_path, index_file, capsys):
    pats = tmp_path / "p.txt"
    pats.write_text("cba\n")
    capsys.readouterr()
    assert main(["query", str(index_file), "--patterns", str(pats), "--trace"]) == 0
    out = capsys.readouterr().out
    golden = (GOLDEN / "ten_state_cba.trace.tsv").read_text()
    assert out == golden + "cba\t3\t2\t0\t\t-\n"


def test_query_accepted_column(tmp_path, gnfa_file, capsys):
    out = tmp_path / "s.wgx"
    assert main(["build", str(gnfa_file), "-o", str(out), "--sentinel"]) == 0
    pats = tmp_path / "p.txt"
    pats.write_text("bba\ncba\n\n")
    capsys.readouterr()
    assert main(["query", str(out), "--patterns", str(pats)]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "bba\t3\t4\t2\t3,4\t1"
    assert lines[1] == "cba\t3\t2\t0\t\t0"
    assert lines[2].startswith("@e\t1\t10\t10\t") and lines[2].endswith("\t0")


def test_validate_ok(gnfa_file, capsys):
    assert main(["validate", str(gnfa_file), "--axiom1-depth", "5"]) == 0
    out = capsys.readouterr().out
    assert "axiom1\tok\tdepth=5" in out
    assert "epsilon\tok" in out
    assert "FAIL" not in out


def test_validate_epsilon_cycle(tmp_path, capsys):
    bad = tmp_path / "cyc.gnfa"
    bad.write_text(
        "gnfa 1\nstates 3\ninitial 1\nfinal 3\n"
        "edge 1 2 a\nedge 2 3 @e\nedge 3 2 @e\n"
    )
    assert main(["validate", str(bad)]) == 1
    out = capsys.readouterr().out
    assert "epsilon\tFAIL" in out


def test_build_rejects_invalid(tmp_path, capsys):
    bad = tmp_path / "bad.gnfa"
    bad.write_text("gnfa 1\nstates 2\ninitial 1\nfinal 2\nedge 2 1 a\n")
    out = tmp_path / "x.wgx"
    assert main(["build", str(bad), "-o", str(out)]) == 1
    assert not out.exists()
    assert "FAIL" in capsys.readouterr().err


def test_closure_table(four_file, capsys):
    assert main(["closure", str(four_file)]) == 0
    out = capsys.readouterr().out
    assert out.splitlines() == [
        "1\t1\t1\t1\t1",
        "2\t2\t2\t1\t1",
        "3\t3\t3\t1\t1",
        "4\t4\t3\t1\t0",
    ]


def test_closure_cycle_exit_code(tmp_path, capsys):
    bad = tmp_path / "cyc.gnfa"
    bad.write_text(
        "gnfa 1\nstates 3\ninitial 1\nfinal 3\n"
        "edge 1 2 a\nedge 2 3 @e\nedge 3 2 @e\n"
    )
    assert main(["closure", str(bad)]) == 1
    assert "epsilon cycle" in capsys.readouterr().err


def test_oracle_check_ok(gnfa_file, capsys):
    assert main(["oracle-check", str(gnfa_file)]) == 0
    out = capsys.readouterr().out
    assert out.startswith("ok\t")


def test_oracle_check_patterns_file(tmp_path, four_file, capsys):
    pats = tmp_path / "p.txt"
    pats.write_text("\nb\nba\nbb\nbc\nabc\n")
    assert main(["oracle-check", str(four_file), "--patterns", str(pats)]) == 0
    assert capsys.readouterr().out == "ok\t6\tpatterns\n"


def test_bench_space_lines(four_file, capsys):
    assert main(["bench", str(four_file)]) == 0
    out = capsys.readouterr().out
    assert "space.payload_bits\t320" in out
    assert "space.bound_bits\t704" in out
    assert "space.within_bound\t1" in out
    assert "space.file_bytes\t118" in out


def test_bench_query_lines(gnfa_file, capsys):
    assert main(["bench", str(gnfa_file), "--pattern-lengths", "4,8"]) == 0
    rows = [l for l in capsys.readouterr().out.splitlines() if l.startswith("query\t")]
    assert len(rows) == 2
    for row, want_len in zip(rows, (4, 8)):
        cols = row.split("\t")
        assert cols[1] == str(want_len)
        assert float(cols[2]) < 0.1
        assert int(cols[3]) > 0


def test_build_is_byte_stable(tmp_path, gnfa_file):
    out1 = tmp_path / "a.wgx"
    out2 = tmp_path / "b.wgx"
    assert main(["build", str(gnfa_file), "-o", str(out1)]) == 0
    assert main(["build", str(gnfa_file), "-o", str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()


def test_exit_code_missing_file(tmp_path, capsys):
    assert main(["validate", str(tmp_path / "nope.gnfa")]) == 3
    assert "error:" in capsys.readouterr().err


def test_exit_code_bad_format(tmp_path, capsys):
    bad = tmp_path / "junk.gnfa"
    bad.write_text("not an automaton\n")
    assert main(["validate", str(bad)]) == 3


def test_exit_code_bad_index(tmp_path, capsys):
    junk = tmp_path / "junk.wgx"
    junk.write_bytes(b"JUNKJUNKJUNK")
    pats = tmp_path / "p.txt"
    pats.write_text("a\n")
    assert main(["query", str(junk), "--patterns", str(pats)]) == 3


def test_exit_code_sentinel_pattern(tmp_path, index_file, capsys):
    pats = tmp_path / "p.txt"
    pats.write_text("a\\x01b\n")
    assert main(["query", str(index_file), "--patterns", str(pats)]) == 3


def test_exit_code_usage(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2


def test_query_stdin(tmp_path, index_file, capsys, monkeypatch):
    import io

    monkeypatch.setattr("sys.stdin", type("S", (), {"buffer": io.BytesIO(b"a\n")})())
    assert main(["query", str(index_file)]) == 0
    assert capsys.readouterr().out == "a\t2\t5\t4\t2,3,4,5\t-\n"
