"""Byte-level encoder and decoder.

Tokens are value-first.  A flagged symbol is followed by its run bytes;
an unflagged symbol is written once per occurrence with no run at all.

Run bytes: 1..254 add that amount and end the run, 255 adds 254 and
means another run byte follows.  0 never appears.
"""
from __future__ import annotations

import re
from itertools import groupby

import numpy as np

from .analysis import RUN_CHUNK, CompBitList, analyze, run_arrays, run_bytes_needed
from .errors import InvalidRunByteError, TruncatedInputError

ESCAPE = 0xFF
# below this size the per-call numpy overhead dominates
SMALL_INPUT = 256


def encode_run_length(length: int) -> bytes:
    if length < 1:
        raise ValueError(f"run length must be >= 1, got {length}")
    n = run_bytes_needed(length)
    return bytes([ESCAPE] * (n - 1) + [length - RUN_CHUNK * (n - 1)])


def decode_run_length(data, pos: int = 0) -> tuple[int, int]:
    """Read one run-byte sequence starting at *pos*; return ``(length, next_pos)``."""
    total = 0
    end = len(data)
    while True:
        if pos >= end:
            raise TruncatedInputError(f"run bytes cut off at offset {pos}")
        b = data[pos]
        pos += 1
        if b == 0:
            raise InvalidRunByteError(f"zero run byte at offset {pos - 1}")
        if b != ESCAPE:
            return total + b, pos
        total += RUN_CHUNK


def encode_payload(data, flags: CompBitList) -> bytes:
    """Encode *data* under a caller-chosen flag list.

    :func:`mrle_encode` calls this with the analysed flags; any other mask
    still yields a decodable payload, just not the smallest one.
    """
    if len(data) < SMALL_INPUT:
        return _encode_small(data, flags)
    values, lengths = run_arrays(data)
    flagged = flags.mask()[values]
    nrun = run_bytes_needed(lengths)
    seg = np.where(flagged, nrun + 1, lengths)
    out = np.repeat(values, seg)
    if flagged.any():
        starts = np.cumsum(seg) - seg
        idx = np.flatnonzero(flagged)
        # positions of every run byte of every flagged run
        counts = nrun[idx]
        first = np.repeat(starts[idx] + 1, counts)
        offset = np.arange(counts.sum()) - np.repeat(np.cumsum(counts) - counts, counts)
        out[first + offset] = ESCAPE
        last = starts[idx] + counts
        out[last] = lengths[idx] - RUN_CHUNK * (counts - 1)
    return out.tobytes()


def _encode_small(data, flags: CompBitList) -> bytes:
    out = bytearray()
    for value, group in groupby(data):
        if flags[value]:
            out.append(value)
            out += encode_run_length(sum(1 for _ in group))
        else:
            out += bytes(group)
    return bytes(out)


def mrle_encode(data) -> tuple[CompBitList, bytes]:
    report = analyze(data)
    return report.comp_bit_list, encode_payload(data, report.comp_bit_list)


def _flagged_pattern(flags: CompBitList) -> re.Pattern[bytes] | None:
    symbols = flags.symbols()
    if not symbols:
        return None
    return re.compile(b"[" + b"".join(re.escape(bytes([s])) for s in symbols) + b"]")


def mrle_decode(flags: CompBitList, payload) -> bytes:
    payload = bytes(payload)
    pattern = _flagged_pattern(flags)
    if pattern is None:
        return payload
    out = bytearray()
    pos = 0
    end = len(payload)
    while pos < end:
        m = pattern.search(payload, pos)
        if m is None:
            out += payload[pos:]
            break
        start = m.start()
        out += payload[pos:start]
        length, pos = decode_run_length(payload, start + 1)
        out += payload[start:start + 1] * length
    return bytes(out)
