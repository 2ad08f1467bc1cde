"""Command line front end.

Exit status: 0 success, 1 usage error, 2 I/O error, 3 corrupt or
malformed input.
"""
from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import __version__
from .analysis import PACKED_SIZE, analyze
from .bench import CODECS, DEFAULT_CODECS, GENERATORS, RoundTripError, emit_report, generate_corpus, run_bench
from .codec_bit import BitString, analyze_bits
from .codec_byte import mrle_decode, mrle_encode
from .container import (BIT_HEADER_SIZE, BYTE_HEADER_SIZE, MODE_BIT, MODE_BYTE, compress, decompress,
                        read_container, read_raw, write_container, write_raw)
from .errors import MrleError

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_IO = 2
EXIT_FORMAT = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _read(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    with open(path, "rb") as f:
        return f.read()


def _write(path: str, data: bytes) -> None:
    if path == "-":
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()
        return
    with open(path, "wb") as f:
        f.write(data)


def _emit_text(path: str, text: str) -> None:
    _write(path, text.encode())


def _analysis_summary(data: bytes, mode: str, raw: bool) -> dict:
    if mode == MODE_BYTE:
        report = analyze(data)
        present = np.flatnonzero(np.bincount(np.frombuffer(data, dtype=np.uint8), minlength=256))
        header = PACKED_SIZE if raw else BYTE_HEADER_SIZE
        return {
            "mode": mode,
            "framing": "raw" if raw else "container",
            "input_bytes": len(data),
            "predicted_payload_bytes": report.predicted_payload,
            "predicted_encoded_bytes": header + report.predicted_payload,
            "compressible": report.comp_bit_list.symbols(),
            "symbols": [{"symbol": int(s), "counter": report.counters[s],
                         "compressible": report.comp_bit_list[s]} for s in present],
        }
    bits = BitString.from_bytes(data)
    flags, counters = analyze_bits(bits)
    payload_bits = bits.bit_count - sum(c for c in counters if c > 0)
    return {
        "mode": mode,
        "framing": "container",
        "input_bytes": len(data),
        "input_bits": bits.bit_count,
        "predicted_payload_bits": payload_bits,
        "predicted_encoded_bytes": BIT_HEADER_SIZE + (payload_bits + 7) // 8,
        "compressible": [b for b in (0, 1) if flags[b]],
        "symbols": [{"symbol": b, "counter": counters[b], "compressible": flags[b]} for b in (0, 1)],
    }


def _format_summary(s: dict) -> str:
    lines = [f"mode:                    {s['mode']} ({s['framing']})",
             f"input bytes:             {s['input_bytes']}"]
    if s["mode"] == MODE_BIT:
        lines += [f"input bits:              {s['input_bits']}",
                  f"predicted payload bits:  {s['predicted_payload_bits']}"]
    else:
        lines.append(f"predicted payload bytes: {s['predicted_payload_bytes']}")
    lines += [f"predicted encoded bytes: {s['predicted_encoded_bytes']}",
              f"compressible symbols:    {' '.join(map(str, s['compressible'])) or '(none)'}",
              "",
              f"{'symbol':>6}  {'counter':>10}  compressible"]
    for row in s["symbols"]:
        lines.append(f"{row['symbol']:>6}  {row['counter']:>10}  {'yes' if row['compressible'] else 'no'}")
    return "\n".join(lines) + "\n"


def cmd_analyze(args) -> int:
    summary = _analysis_summary(_read(args.input), args.mode, args.raw)
    text = json.dumps(summary, indent=2) + "\n" if args.json else _format_summary(summary)
    _emit_text(args.output, text)
    return EXIT_OK


def cmd_encode(args) -> int:
    data = _read(args.input)
    if args.raw:
        out = write_raw(*mrle_encode(data))
    else:
        out = write_container(compress(data, args.mode))
    _write(args.output, out)
    return EXIT_OK


def cmd_decode(args) -> int:
    data = _read(args.input)
    if args.raw:
        out = mrle_decode(*read_raw(data))
    else:
        c = read_container(data)
        if args.mode is not None and c.mode != args.mode:
            raise MrleError(f"container holds {c.mode}-mode data, not {args.mode}")
        out = decompress(c)
    _write(args.output, out)
    return EXIT_OK


def _parse_generated(spec: str) -> tuple[str, bytes]:
    # NAME:SIZE[:SEED]
    parts = spec.split(":")
    try:
        name, size = parts[0], int(parts[1])
        seed = int(parts[2]) if len(parts) == 3 else 0
        if len(parts) > 3:
            raise ValueError("too many fields")
        data = generate_corpus(name, size, seed)
    except (IndexError, ValueError) as e:
        raise UsageError(f"bad --generate value {spec!r}: {e}") from e
    return f"<{spec}>", data


def cmd_bench(args) -> int:
    codecs = [c.strip() for c in args.codecs.split(",") if c.strip()]
    unknown = [c for c in codecs if c not in CODECS]
    if unknown or not codecs:
        raise UsageError(f"unknown codec(s): {', '.join(unknown) or '(none)'}; "
                         f"choose from {', '.join(sorted(CODECS))}")
    inputs = list(args.inputs) + [_parse_generated(g) for g in args.generate]
    if not inputs:
        raise UsageError("bench needs at least one input file or --generate")
    if inputs.count("-") > 1:
        raise UsageError("standard input may be given only once")
    inputs = [("-", _read("-")) if i == "-" else i for i in inputs]
    report = run_bench(inputs, codecs, jobs=args.jobs)
    _emit_text(args.output, emit_report(report, args.format, timings=not args.no_timings))
    return EXIT_OK


def cmd_generate(args) -> int:
    try:
        data = generate_corpus(args.name, args.size, args.seed)
    except ValueError as e:
        raise UsageError(str(e)) from e
    _write(args.output, data)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="mrle", description="Run-length codec with per-symbol compressibility flags.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("analyze", help="report per-symbol counters and the predicted encoded size")
    p.add_argument("input", help="input file, '-' for stdin")
    p.add_argument("--mode", choices=(MODE_BYTE, MODE_BIT), default=MODE_BYTE)
    p.add_argument("--raw", action="store_true", help="predict the size of the raw layout")
    p.add_argument("--json", action="store_true")
    p.add_argument("-o", "--output", default="-")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("encode", help="compress a file")
    p.add_argument("input")
    p.add_argument("-o", "--output", default="-")
    p.add_argument("--mode", choices=(MODE_BYTE, MODE_BIT), default=MODE_BYTE)
    p.add_argument("--raw", action="store_true",
                   help="write [32-byte flag list][payload] with no container header")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", help="decompress a file")
    p.add_argument("input")
    p.add_argument("-o", "--output", default="-")
    p.add_argument("--mode", choices=(MODE_BYTE, MODE_BIT), default=None,
                   help="expected mode; containers are self-describing")
    p.add_argument("--raw", action="store_true", help="input is in the raw layout")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("bench", help="compare codecs on files or synthetic corpora")
    p.add_argument("inputs", nargs="*")
    p.add_argument("--codecs", default=",".join(DEFAULT_CODECS),
                   help=f"comma separated, from: {', '.join(sorted(CODECS))}")
    p.add_argument("--format", choices=("table", "csv", "json"), default="table")
    p.add_argument("--generate", action="append", default=[], metavar="NAME:SIZE[:SEED]",
                   help=f"add a synthetic input; NAME is one of {', '.join(GENERATORS)}")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--no-timings", action="store_true", help="omit timing columns")
    p.add_argument("-o", "--output", default="-")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("generate", help="write a synthetic corpus file")
    p.add_argument("name", help=f"one of {', '.join(GENERATORS)}; geometric-runs accepts (p)")
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output", default="-")
    p.set_defaults(func=cmd_generate)
    return parser


def run_cli(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "raw", False) and getattr(args, "mode", None) == MODE_BIT:
            raise UsageError("--raw is only available in byte mode")
        return args.func(args)
    except UsageError as e:
        parser.print_usage(sys.stderr)
        print(f"mrle: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        print(f"mrle: I/O error: {e}", file=sys.stderr)
        return EXIT_IO
    except (MrleError, RoundTripError) as e:
        print(f"mrle: corrupt input: {e}", file=sys.stderr)
        return EXIT_FORMAT


def main() -> None:
    sys.exit(run_cli())
