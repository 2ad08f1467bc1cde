import csv
import io
import json

import pytest

from mrle.analysis import analyze
from mrle.bench import (COLUMNS, BenchReport, RoundTripError, emit_report, generate_corpus, run_bench)
import mrle.bench as bench

from conftest import FIXTURE_1, FIXTURE_2


def _rows(report, codec):
    return [r for r in report.rows if r.codec == codec]


def test_paper_fixtures():
    report = run_bench([("f1", FIXTURE_1), ("f2", FIXTURE_2)])
    mrle = _rows(report, "mrle")
    rle = _rows(report, "rle")
    assert [r.encoded_bytes - 32 for r in mrle] == [8, 14]
    assert [r.encoded_bytes for r in rle] == [10, 18]


def test_row_order_is_input_then_codec():
    report = run_bench([("b", b"xx"), ("a", b"yy")], codecs=["rle", "mrle", "packbits"])
    assert [(r.path, r.codec) for r in report.rows] == [
        ("b", "mrle"), ("b", "packbits"), ("b", "rle"),
        ("a", "mrle"), ("a", "packbits"), ("a", "rle")]


def test_parallel_matches_serial():
    inputs = [(f"g{i}", generate_corpus("geometric-runs(0.2)", 5000, i)) for i in range(8)]
    a = emit_report(run_bench(inputs), "csv", timings=False)
    b = emit_report(run_bench(inputs, jobs=4), "csv", timings=False)
    assert a == b


def test_worst_case_alternating():
    data = generate_corpus("alternating", 1 << 20)
    report = run_bench([("alt", data)], codecs=["mrle", "rle"])
    mrle, rle = report.rows
    assert mrle.encoded_bytes == (1 << 20) + 32
    assert rle.encoded_bytes == 2 << 20


def test_row_invariants(tmp_path):
    names = ["alternating", "constant", "geometric-runs", "geometric-runs(0.5)", "random"]
    paths = []
    for i, name in enumerate(names):
        p = tmp_path / f"{i}.bin"
        p.write_bytes(generate_corpus(name, 3000 + i, seed=i))
        paths.append(p)
    report = run_bench(paths, codecs=bench.CODECS)
    for row in report.rows:
        data = open(row.path, "rb").read()
        assert row.roundtrip_ok
        assert row.encode_ms >= 0 and row.decode_ms >= 0
        assert row.ratio == row.encoded_bytes / row.input_bytes
        if row.codec == "mrle":
            assert row.encoded_bytes == 32 + analyze(data).predicted_payload <= len(data) + 32
        if row.codec == "rle":
            assert row.encoded_bytes <= 2 * len(data)
        if row.codec == "packbits":
            assert row.encoded_bytes <= len(data) + -(-len(data) // 128)


def test_missing_file_names_path(tmp_path):
    with pytest.raises(OSError, match="nope.bin"):
        run_bench([tmp_path / "nope.bin"])


def test_bad_arguments():
    with pytest.raises(ValueError):
        run_bench([])
    with pytest.raises(ValueError):
        run_bench([("x", b"x")], codecs=[])
    with pytest.raises(ValueError):
        run_bench([("x", b"x")], codecs=["zip"])


def test_roundtrip_failure_aborts(monkeypatch):
    monkeypatch.setitem(bench.CODECS, "rle", (lambda d: d, lambda d: d + b"!"))
    with pytest.raises(RoundTripError):
        run_bench([("x", b"abc")], codecs=["rle"])


def test_empty_input_ratio_is_null():
    report = run_bench([("e", b"")])
    assert all(r.ratio is None for r in report.rows)
    assert json.loads(emit_report(report, "json"))[0]["ratio"] is None


def test_emit_empty_report():
    assert emit_report(BenchReport(), "csv") == ",".join(COLUMNS) + "\n"
    assert json.loads(emit_report(BenchReport(), "json")) == []


def test_emit_single_row_json():
    report = run_bench([("f", FIXTURE_1)], codecs=["mrle"])
    rows = json.loads(emit_report(report, "json"))
    assert len(rows) == 1
    assert list(rows[0]) == list(COLUMNS)


def test_formats_agree_on_row_count():
    report = run_bench([("a", FIXTURE_1), ("b", FIXTURE_2), ("c", b"")])
    n_json = len(json.loads(emit_report(report, "json")))
    n_csv = len(list(csv.DictReader(io.StringIO(emit_report(report, "csv")))))
    table = emit_report(report, "table").splitlines()
    # header, rule, data rows, blank, footer
    n_table = len(table) - 4
    assert n_json == n_csv == n_table == 9
    assert "32-byte" in table[-1]


def test_report_deterministic_without_timings():
    inputs = [("a", FIXTURE_1), ("b", generate_corpus("random", 5000, 1))]
    for fmt in ("table", "csv", "json"):
        assert emit_report(run_bench(inputs), fmt, timings=False) == \
            emit_report(run_bench(inputs), fmt, timings=False)
    assert "encode_ms" not in emit_report(run_bench(inputs), "csv", timings=False)


def test_unknown_format():
    with pytest.raises(ValueError):
        emit_report(BenchReport(), "xml")


def test_generators():
    assert generate_corpus("constant", 1020) == bytes(1020)
    assert generate_corpus("alternating", 6) == bytes.fromhex("00 01 00 01 00 01")
    assert generate_corpus("alternating", 5) == bytes.fromhex("00 01 00 01 00")
    assert generate_corpus("geometric-runs", 4000, 7) == generate_corpus("geometric-runs", 4000, 7)
    assert generate_corpus("geometric-runs", 4000, 7) != generate_corpus("geometric-runs", 4000, 8)
    assert generate_corpus("random", 100, 3) == generate_corpus("random", 100, 3)
    for name in ("alternating", "constant", "geometric-runs(0.3)", "random"):
        assert len(generate_corpus(name, 777)) == 777
        assert generate_corpus(name, 0) == b""


def test_geometric_runs_have_expected_mean():
    data = generate_corpus("geometric-runs(0.1)", 200_000, 5)
    runs = sum(1 for i in range(1, len(data)) if data[i] != data[i - 1]) + 1
    # mean run ~10, slightly more since equal neighbouring values merge
    assert 9 < len(data) / runs < 11


@pytest.mark.parametrize("bad", [("nope", 10), ("random", -1), ("geometric-runs(0)", 5),
                                 ("geometric-runs(2)", 5)])
def test_generator_errors(bad):
    with pytest.raises(ValueError):
        generate_corpus(*bad)
