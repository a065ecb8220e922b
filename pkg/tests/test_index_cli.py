import itertools
import subprocess
import sys

import pytest

from rindex.cli import main
from rindex.corpus import CorpusSpec, generate
from rindex.errors import BadIndex, SectionMissing
from rindex.index import HEADER, RIndex, size_report

from conftest import DESK, oracle_of

SECTION_CHOICES = [(), ("text",), ("sa",), ("isa",), ("lcp",), ("text", "sa", "isa", "lcp")]


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def miss_file(tmp_path):
    src = tmp_path / "miss.txt"
    src.write_bytes(b"mississippi")
    return src


@pytest.fixture
def miss_index(tmp_path, miss_file, capsys):
    idx = tmp_path / "miss.ridx"
    code, out, _ = run(capsys, "build", miss_file, idx, "--all")
    assert code == 0 and "r=9" in out
    return idx


def test_roundtrip_all_flag_combinations():
    for raw in DESK[:12]:
        o = oracle_of(raw)
        for windows, blocks in itertools.product((None, 3), SECTION_CHOICES):
            index = RIndex.build(raw, windows=windows, blocks=blocks)
            data = index.to_bytes()
            loaded = RIndex.from_bytes(data)
            assert loaded.to_bytes() == data
            pats = {raw[i:i + 3] for i in range(len(raw))} | {b"", b"zz"}
            for pat in pats:
                assert loaded.locate(pat) == index.locate(pat)
                assert loaded.count_with_toehold(pat) == index.count_with_toehold(pat)
            if "sa" in blocks or "lcp" in blocks:
                assert loaded.sa_range(1, o.n) == o.sa
            if "lcp" in blocks:
                assert loaded.lcp_range(1, o.n) == o.lcp
            if "isa" in blocks:
                assert loaded.isa_range(1, o.n) == o.isa
            if "text" in blocks and raw:
                assert loaded.extract(1, len(raw)) == raw


def test_corruption_and_bad_files():
    data = RIndex.build(b"mississippi", blocks=("text",)).to_bytes()
    for pos in (0, HEADER.size + 3, len(data) // 2, len(data) - 1):
        bad = bytearray(data)
        bad[pos] ^= 1
        with pytest.raises(BadIndex):
            RIndex.from_bytes(bytes(bad))
    with pytest.raises(BadIndex):
        RIndex.from_bytes(data[:10])


def test_missing_section():
    index = RIndex.build(b"mississippi")
    with pytest.raises(SectionMissing):
        index.extract(1, 2)


def test_size_report_accounting():
    data = RIndex.build(b"mississippi").to_bytes()
    rep = size_report(data)
    assert rep["total_bits"] == rep["file_bits"] - rep["overhead_bits"]
    assert [t for t, _ in rep["sections"]] == ["ALPH", "RLBW", "LOCT"]
    assert (rep["n"], rep["r"], rep["sigma"]) == (12, 9, 5)


def test_cli_queries(capsys, miss_index):
    assert run(capsys, "count", miss_index, "ssi")[1] == "2\n"
    assert run(capsys, "locate", miss_index, "ssi")[1] == "3 6\n"
    assert run(capsys, "locate", miss_index, "xyz")[1] == "\n"
    assert run(capsys, "count", miss_index, "737369", "--hex")[1] == "2\n"
    assert run(capsys, "extract", miss_index, 4, 4)[1] == "siss\n"
    assert run(capsys, "sa", miss_index, 1, 12)[1] == "12 11 8 5 2 1 10 9 7 4 6 3\n"
    assert run(capsys, "isa", miss_index, 1, 12)[1] == "6 5 12 10 4 11 9 3 8 7 2 1\n"
    assert run(capsys, "lcp", miss_index, 1, 12)[1] == "0 0 1 1 4 0 0 1 0 2 1 3\n"


def test_cli_pattern_file_and_bench(capsys, tmp_path, miss_index, monkeypatch):
    pats = tmp_path / "pats.txt"
    pats.write_bytes(b"ssi\ni\nq\n")
    assert run(capsys, "count", miss_index, "--patterns", pats)[1] == "2\n4\n0\n"
    monkeypatch.setenv("RINDEX_THREADS", "3")
    assert run(capsys, "locate", miss_index, "--patterns", pats)[1] == "3 6\n2 5 8 11\n\n"
    out = run(capsys, "bench", miss_index, pats, "--reps", 0)[1]
    assert out == "pattern,occ,total_ns,ns_per_occ\n"
    rows = run(capsys, "bench", miss_index, pats, "--reps", 2)[1].splitlines()[1:]
    assert [row.split(",")[:2] for row in rows] == [["ssi", "2"], ["i", "4"], ["q", "0"]]


def test_cli_errors(capsys, tmp_path, miss_file):
    plain = tmp_path / "plain.ridx"
    assert run(capsys, "build", miss_file, plain)[0] == 0
    code, _, err = run(capsys, "lcp", plain, 1, 3)
    assert code == 2 and "SectionMissing" in err
    assert run(capsys, "extract", plain, 1, 3)[0] == 2
    assert run(capsys, "count", tmp_path / "nope.ridx", "a")[0] == 2
    bad = tmp_path / "bad.ridx"
    data = bytearray(plain.read_bytes())
    data[20] ^= 4
    bad.write_bytes(bytes(data))
    code, _, err = run(capsys, "count", bad, "a")
    assert code == 2 and "BadIndex" in err


def test_cli_build_empty_and_sizes(capsys, tmp_path, miss_file):
    empty = tmp_path / "empty.txt"
    empty.write_bytes(b"")
    assert "n=1 r=1" in run(capsys, "build", empty, tmp_path / "e.ridx")[1]
    run(capsys, "build", miss_file, tmp_path / "base.ridx")
    run(capsys, "build", miss_file, tmp_path / "all.ridx", "--all")
    assert (tmp_path / "all.ridx").stat().st_size > (tmp_path / "base.ridx").stat().st_size
    out = run(capsys, "stats", tmp_path / "all.ridx")[1]
    for tag in ("ALPH", "RLBW", "LOCT", "WIND", "BTXT", "BDSA", "BISA"):
        assert f"section {tag}" in out
    assert "baseline/formula" in out


def test_cli_gen_deterministic(capsys, tmp_path):
    a, b = tmp_path / "a.txt", tmp_path / "b.txt"
    args = ["--copies", 100, "--mutation-rate", 0.001, "--rng-seed", 42]
    run(capsys, "gen", a, *args)
    run(capsys, "gen", b, *args)
    assert a.read_bytes() == b.read_bytes()
    assert a.read_bytes() == generate(CorpusSpec("mutated-copies", 1000, 100, 0.001, b"ACGT", 42))
    idx = tmp_path / "a.ridx"
    run(capsys, "build", a, idx)
    out = run(capsys, "stats", idx)[1]
    bits = float(out.split("bits/symbol=")[1].split()[0])
    assert bits < 8


def test_cli_selftest_quick(capsys):
    code, out, _ = run(capsys, "selftest", "--quick")
    assert code == 0
    assert out.count("[PASS]") == 9


def test_console_script(tmp_path, miss_file):
    idx = tmp_path / "m.ridx"
    subprocess.run([sys.executable, "-m", "rindex.cli", "build", str(miss_file), str(idx)], check=True)
    res = subprocess.run([sys.executable, "-m", "rindex.cli", "count", str(idx), "ss"],
                         capture_output=True, check=True)
    assert res.stdout == b"2\n"
