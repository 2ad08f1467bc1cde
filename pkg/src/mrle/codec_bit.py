"""Bit-level variant for two-symbol streams such as monochrome bitmaps.

A compressible bit value is written as the value bit followed by one or
more 7-bit run fields (MSB first).  A field ``f`` in 0..126 adds ``f + 1``
and ends the run; ``f == 127`` adds 127 and another field follows.  Bits
whose value is not compressible are copied verbatim.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import LengthMismatchError, TruncatedInputError

FIELD_BITS = 7
FIELD_ESCAPE = 127
FIELD_CHUNK = 127


@dataclass(frozen=True)
class BitString:
    """Immutable bit sequence stored one bit per byte (values 0 or 1)."""

    bits: bytes = b""

    def __post_init__(self):
        bits = bytes(self.bits)
        if bits.translate(None, b"\x00\x01"):
            raise ValueError("BitString may only hold 0 and 1")
        object.__setattr__(self, "bits", bits)

    @classmethod
    def from_str(cls, text: str) -> BitString:
        """Parse ``"0101 1100"``; whitespace and underscores are ignored."""
        cleaned = "".join(text.split()).replace("_", "")
        return cls(bytes(int(c) for c in cleaned))

    @classmethod
    def from_bytes(cls, data: bytes, bit_count: int | None = None) -> BitString:
        """Unpack *data* MSB first, keeping the first *bit_count* bits."""
        bits = np.unpackbits(np.frombuffer(bytes(data), dtype=np.uint8))
        if bit_count is not None:
            if bit_count > bits.size:
                raise TruncatedInputError(f"need {bit_count} bits, have {bits.size}")
            bits = bits[:bit_count]
        return cls(bits.tobytes())

    def to_bytes(self) -> bytes:
        """Pack MSB first; the final byte is zero padded."""
        return np.packbits(np.frombuffer(self.bits, dtype=np.uint8)).tobytes()

    @property
    def bit_count(self) -> int:
        return len(self.bits)

    def __len__(self) -> int:
        return len(self.bits)

    def __str__(self) -> str:
        return self.bits.translate(bytes.maketrans(b"\x00\x01", b"01")).decode()


class BitCompList(NamedTuple):
    zero_compressible: bool = False
    one_compressible: bool = False

    def to_byte(self) -> int:
        return int(self.zero_compressible) | int(self.one_compressible) << 1

    @classmethod
    def from_byte(cls, value: int) -> BitCompList:
        return cls(bool(value & 1), bool(value & 2))


def _runs(bits: bytes) -> tuple[np.ndarray, np.ndarray]:
    arr = np.frombuffer(bits, dtype=np.uint8)
    if arr.size == 0:
        return arr, np.empty(0, dtype=np.int64)
    starts = np.concatenate(([0], np.flatnonzero(arr[1:] != arr[:-1]) + 1))
    return arr[starts], np.diff(np.append(starts, arr.size)).astype(np.int64)


def field_count(length):
    return (length + FIELD_CHUNK - 1) // FIELD_CHUNK


def saved_bits(length: int) -> int:
    """Bits saved by run-encoding one run: ``length - 1 - 7 * ceil(length / 127)``."""
    if length < 1:
        raise ValueError(f"run length must be >= 1, got {length}")
    return length - 1 - FIELD_BITS * field_count(length)


def analyze_bits(bits: BitString) -> tuple[BitCompList, tuple[int, int]]:
    values, lengths = _runs(bits.bits)
    saved = lengths - 1 - FIELD_BITS * field_count(lengths)
    counters = (int(saved[values == 0].sum()), int(saved[values == 1].sum()))
    return BitCompList(counters[0] > 0, counters[1] > 0), counters


def encode_fields(length: int) -> list[int]:
    """Raw 7-bit field values for a run of *length*."""
    if length < 1:
        raise ValueError(f"run length must be >= 1, got {length}")
    n = field_count(length)
    return [FIELD_ESCAPE] * (n - 1) + [length - FIELD_CHUNK * (n - 1) - 1]


_FIELD_BITS = [bytes((f >> s) & 1 for s in range(FIELD_BITS - 1, -1, -1)) for f in range(128)]
_FIELD_VALUE = {b: f for f, b in enumerate(_FIELD_BITS)}


def encode_bits_with(bits: BitString, flags: BitCompList) -> BitString:
    """Encode under a caller-chosen flag pair."""
    values, lengths = _runs(bits.bits)
    if values.size == 0:
        return BitString()
    flagged = np.array(flags, dtype=bool)[values]
    nfields = field_count(lengths)
    seg = np.where(flagged, 1 + FIELD_BITS * nfields, lengths)
    out = np.repeat(values, seg)
    if flagged.any():
        idx = np.flatnonzero(flagged)
        counts = nfields[idx]
        fields = np.full(counts.sum(), FIELD_ESCAPE, dtype=np.uint8)
        ends = np.cumsum(counts) - 1
        fields[ends] = lengths[idx] - FIELD_CHUNK * (counts - 1) - 1
        # 7 bits per field, MSB first: drop the top bit of each byte
        field_bits = np.unpackbits(fields[:, None], axis=1)[:, 1:].ravel()
        starts = np.cumsum(seg) - seg
        first = np.repeat(starts[idx] + 1, counts * FIELD_BITS)
        offset = np.arange(field_bits.size) - np.repeat(
            np.cumsum(counts * FIELD_BITS) - counts * FIELD_BITS, counts * FIELD_BITS)
        out[first + offset] = field_bits
    return BitString(out.tobytes())


def encode_bits(bits: BitString) -> tuple[BitCompList, BitString]:
    flags, _ = analyze_bits(bits)
    return flags, encode_bits_with(bits, flags)


def _read_field(payload: bytes, pos: int) -> int:
    field = payload[pos:pos + FIELD_BITS]
    if len(field) < FIELD_BITS:
        raise TruncatedInputError(f"run field cut off at bit {pos}")
    return _FIELD_VALUE[field]


def decode_bits(flags: BitCompList, payload: BitString, original_bit_count: int,
                allow_padding: bool = False) -> BitString:
    """Invert :func:`encode_bits`, producing exactly *original_bit_count* bits.

    With *allow_padding*, up to 7 trailing zero bits left over after the
    last run are accepted (byte-aligned payloads read from a container).
    """
    data = payload.bits
    end = len(data)
    compressible = [bytes([v]) for v in (0, 1) if flags[v]]
    out = bytearray()
    pos = 0
    while pos < end and len(out) < original_bit_count:
        # copy literal bits up to the next compressible value bit
        if len(compressible) == 2:
            nxt = pos
        elif compressible:
            nxt = data.find(compressible[0], pos)
            nxt = end if nxt < 0 else nxt
        else:
            nxt = end
        take = min(nxt, pos + original_bit_count - len(out))
        out += data[pos:take]
        pos = take
        if pos >= end or len(out) >= original_bit_count:
            break
        value = data[pos]
        pos += 1
        length = 0
        while True:
            f = _read_field(data, pos)
            pos += FIELD_BITS
            if f != FIELD_ESCAPE:
                length += f + 1
                break
            length += FIELD_CHUNK
        out += bytes([value]) * length
    if len(out) < original_bit_count:
        raise TruncatedInputError(
            f"payload exhausted after {len(out)} of {original_bit_count} bits")
    rest = data[pos:]
    padding_ok = allow_padding and len(rest) < 8 and not any(rest)
    if len(out) > original_bit_count or (rest and not padding_ok):
        raise LengthMismatchError(
            f"payload does not decode to exactly {original_bit_count} bits")
    return BitString(bytes(out))
