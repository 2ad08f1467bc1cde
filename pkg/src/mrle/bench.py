"""Size and speed comparison of MRLE against Standard-RLE and PackBits."""
from __future__ import annotations

import csv
import io
import json
import re
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Callable, Iterable, Sequence, Union

import numpy as np

from . import baselines
from .codec_byte import mrle_decode, mrle_encode
from .container import MODE_BIT, compress, decompress, read_container, read_raw, write_container, write_raw

COLUMNS = ("path", "codec", "input_bytes", "encoded_bytes", "ratio",
           "encode_ms", "decode_ms", "roundtrip_ok")
TIMING_COLUMNS = ("encode_ms", "decode_ms")

FOOTER = ("note: mrle sizes include the 32-byte flag list (raw layout); "
          "mrle-bit sizes include the 15-byte container header; "
          "rle and packbits have no header.")


def _mrle_enc(data: bytes) -> bytes:
    return write_raw(*mrle_encode(data))


def _mrle_dec(data: bytes) -> bytes:
    return mrle_decode(*read_raw(data))


def _mrle_bit_enc(data: bytes) -> bytes:
    return write_container(compress(data, MODE_BIT))


def _mrle_bit_dec(data: bytes) -> bytes:
    return decompress(read_container(data))


CODECS: dict[str, tuple[Callable[[bytes], bytes], Callable[[bytes], bytes]]] = {
    "mrle": (_mrle_enc, _mrle_dec),
    "mrle-bit": (_mrle_bit_enc, _mrle_bit_dec),
    "packbits": (baselines.packbits_encode, baselines.packbits_decode),
    "rle": (baselines.rle_encode, baselines.rle_decode),
}
DEFAULT_CODECS = ("mrle", "packbits", "rle")


@dataclass
class BenchRow:
    path: str
    codec: str
    input_bytes: int
    encoded_bytes: int
    ratio: float | None
    encode_ms: float
    decode_ms: float
    roundtrip_ok: bool


@dataclass
class BenchReport:
    rows: list[BenchRow] = field(default_factory=list)


class RoundTripError(RuntimeError):
    pass


# an input is a file path or an already loaded (name, data) pair
BenchInput = Union[str, Path, tuple[str, bytes]]


def _load(item: BenchInput) -> tuple[str, bytes]:
    if isinstance(item, tuple):
        return item
    path = Path(item)
    try:
        return str(item), path.read_bytes()
    except OSError as e:
        raise OSError(f"cannot read bench input {str(item)!r}: {e.strerror or e}") from e


def _bench_one(item: BenchInput, codecs: Sequence[str]) -> list[BenchRow]:
    name, data = _load(item)
    rows = []
    for codec in codecs:
        enc, dec = CODECS[codec]
        t0 = time.perf_counter()
        encoded = enc(data)
        t1 = time.perf_counter()
        decoded = dec(encoded)
        t2 = time.perf_counter()
        if decoded != data:
            raise RoundTripError(f"{codec} failed to round-trip {name!r}")
        rows.append(BenchRow(
            path=name,
            codec=codec,
            input_bytes=len(data),
            encoded_bytes=len(encoded),
            ratio=len(encoded) / len(data) if data else None,
            encode_ms=(t1 - t0) * 1e3,
            decode_ms=(t2 - t1) * 1e3,
            roundtrip_ok=True,
        ))
    return rows


def run_bench(inputs: Iterable[BenchInput], codecs: Iterable[str] = DEFAULT_CODECS,
              jobs: int = 1) -> BenchReport:
    """Encode, decode and verify every input with every codec.

    Rows come out in input order, then codec name ascending, whatever *jobs* is.
    """
    inputs = list(inputs)
    codecs = sorted(set(codecs))
    if not inputs:
        raise ValueError("no bench inputs given")
    if not codecs:
        raise ValueError("no codecs selected")
    unknown = [c for c in codecs if c not in CODECS]
    if unknown:
        raise ValueError(f"unknown codec(s): {', '.join(unknown)}")
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            per_file = list(pool.map(lambda item: _bench_one(item, codecs), inputs))
    else:
        per_file = [_bench_one(item, codecs) for item in inputs]
    return BenchReport([row for rows in per_file for row in rows])


def _row_dict(row: BenchRow, timings: bool) -> dict:
    d = asdict(row)
    if not timings:
        for k in TIMING_COLUMNS:
            d.pop(k)
    return d


def emit_report(report: BenchReport, fmt: str = "table", timings: bool = True) -> str:
    columns = [c for c in COLUMNS if timings or c not in TIMING_COLUMNS]
    rows = [_row_dict(r, timings) for r in report.rows]
    if fmt == "json":
        return json.dumps(rows, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n")
        writer.writeheader()
        for d in rows:
            writer.writerow({k: "" if v is None else v for k, v in d.items()})
        return buf.getvalue()
    if fmt == "table":
        return _table(columns, rows)
    raise ValueError(f"unknown report format {fmt!r}")


def _cell(value) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "NO"
    if isinstance(value, float):
        return f"{value:.4f}" if value < 100 else f"{value:.1f}"
    return str(value)


def _table(columns: list[str], rows: list[dict]) -> str:
    cells = [[_cell(d[c]) for c in columns] for d in rows]
    widths = [max([len(c)] + [len(r[i]) for r in cells]) for i, c in enumerate(columns)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(columns, widths)),
             "  ".join("-" * w for w in widths)]
    for r in cells:
        # left-align text columns, right-align numbers
        lines.append("  ".join(v.ljust(w) if i < 2 else v.rjust(w)
                               for i, (v, w) in enumerate(zip(r, widths))))
    lines.append("")
    lines.append(FOOTER)
    return "\n".join(lines) + "\n"


GENERATORS = ("alternating", "constant", "geometric-runs", "random")
_GEOMETRIC = re.compile(r"geometric-runs(?:\((?P<p>[0-9.eE+-]+)\))?$")


def generate_corpus(name: str, size: int, seed: int = 0) -> bytes:
    """Synthetic benchmark input.

    ``alternating`` (00 01 00 01 ...) is the Standard-RLE worst case and
    ``constant`` the best case.  ``geometric-runs(p)`` draws run lengths
    from a geometric distribution with success probability ``p`` (default
    0.1) and a random byte per run.  ``random`` is uniform bytes.
    """
    if size < 0:
        raise ValueError("corpus size must be >= 0")
    if name == "alternating":
        return (b"\x00\x01" * ((size + 1) // 2))[:size]
    if name == "constant":
        return b"\x00" * size
    if name == "random":
        return np.random.default_rng(seed).integers(0, 256, size, dtype=np.uint8).tobytes()
    m = _GEOMETRIC.match(name)
    if m:
        p = float(m.group("p") or 0.1)
        if not 0 < p <= 1:
            raise ValueError(f"geometric-runs needs 0 < p <= 1, got {p}")
        rng = np.random.default_rng(seed)
        out = bytearray()
        while len(out) < size:
            lengths = rng.geometric(p, 1024)
            values = rng.integers(0, 256, 1024, dtype=np.uint8)
            out += np.repeat(values, lengths).tobytes()
        return bytes(out[:size])
    raise ValueError(f"unknown corpus generator {name!r}; choose from {', '.join(GENERATORS)}")
