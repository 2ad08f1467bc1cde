"""Run detection and per-symbol compressibility analysis.

Every byte value gets a signed counter holding the number of bytes that
would be saved by run-encoding all of its runs.  Symbols with a positive
counter are flagged in a 256-entry :class:`CompBitList`; the encoder only
writes run bytes for flagged symbols.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

import numpy as np

#: Largest amount a single run byte can carry (255 is the continue escape).
RUN_CHUNK = 254
PACKED_SIZE = 32


class Run(NamedTuple):
    value: int
    length: int


@dataclass(frozen=True)
class CompBitList:
    """Compressibility flag per byte value, indexed by symbol code."""

    flags: tuple[bool, ...] = (False,) * 256

    def __post_init__(self):
        if len(self.flags) != 256:
            raise ValueError(f"CompBitList needs 256 flags, got {len(self.flags)}")
        object.__setattr__(self, "flags", tuple(bool(f) for f in self.flags))

    @classmethod
    def from_symbols(cls, symbols: Iterable[int]) -> CompBitList:
        flags = [False] * 256
        for s in symbols:
            flags[s] = True
        return cls(tuple(flags))

    def __getitem__(self, symbol: int) -> bool:
        return self.flags[symbol]

    def symbols(self) -> list[int]:
        """Codes of all flagged symbols, ascending."""
        return [i for i, f in enumerate(self.flags) if f]

    def mask(self) -> np.ndarray:
        return np.array(self.flags, dtype=bool)


@dataclass(frozen=True)
class AnalysisReport:
    counters: tuple[int, ...]
    comp_bit_list: CompBitList
    input_length: int
    predicted_payload: int

    @property
    def bytes_saved(self) -> int:
        return self.input_length - self.predicted_payload


def _as_array(data) -> np.ndarray:
    if not isinstance(data, (bytes, bytearray, memoryview)):
        data = bytes(data)
    return np.frombuffer(data, dtype=np.uint8)


def run_arrays(data) -> tuple[np.ndarray, np.ndarray]:
    """Return ``(values, lengths)`` of the maximal runs in *data*."""
    arr = _as_array(data)
    if arr.size == 0:
        return np.empty(0, dtype=np.uint8), np.empty(0, dtype=np.int64)
    starts = np.concatenate(([0], np.flatnonzero(arr[1:] != arr[:-1]) + 1))
    lengths = np.diff(np.append(starts, arr.size))
    return arr[starts], lengths.astype(np.int64)


def scan_runs(data) -> list[Run]:
    """Split *data* into maximal runs of identical bytes."""
    values, lengths = run_arrays(data)
    return [Run(int(v), int(n)) for v, n in zip(values.tolist(), lengths.tolist())]


def run_bytes_needed(length):
    """Number of run bytes used to store *length* (works on arrays too)."""
    return (length + RUN_CHUNK - 1) // RUN_CHUNK


def saved_bytes(length: int) -> int:
    """Net bytes saved by run-encoding a single run of *length*.

    A literal run costs *length* bytes; the encoded form costs the value
    byte plus ``ceil(length / 254)`` run bytes.  For lengths up to 254 this
    is -1 for singletons, 0 for pairs and ``length - 2`` otherwise.
    """
    if length < 1:
        raise ValueError(f"run length must be >= 1, got {length}")
    return length - 1 - run_bytes_needed(length)


def compute_counters(data) -> tuple[int, ...]:
    values, lengths = run_arrays(data)
    counters = np.zeros(256, dtype=np.int64)
    np.add.at(counters, values, lengths - 1 - run_bytes_needed(lengths))
    return tuple(counters.tolist())


def build_comp_bit_list(counters) -> CompBitList:
    # a zero counter gains nothing, so the symbol stays literal
    return CompBitList(tuple(c > 0 for c in counters))


def analyze(data) -> AnalysisReport:
    counters = compute_counters(data)
    flags = build_comp_bit_list(counters)
    gain = sum(c for c in counters if c > 0)
    return AnalysisReport(counters, flags, len(data), len(data) - gain)


def pack_comp_bit_list(flags: CompBitList) -> bytes:
    """Pack to 32 bytes: symbol ``c`` lives in byte ``c // 8``, bit ``c % 8`` (LSB first)."""
    return np.packbits(flags.mask(), bitorder="little").tobytes()


def unpack_comp_bit_list(data: bytes) -> CompBitList:
    if len(data) != PACKED_SIZE:
        raise ValueError(f"packed CompBitList must be {PACKED_SIZE} bytes, got {len(data)}")
    bits = np.unpackbits(np.frombuffer(bytes(data), dtype=np.uint8), bitorder="little")
    return CompBitList(tuple(bits.astype(bool).tolist()))
