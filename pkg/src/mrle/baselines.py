"""Reference codecs the MRLE output is compared against.

``rle_*`` is classic run-first RLE: ``[run][value]`` pairs with runs of
1..255.  ``packbits_*`` is the TIFF/Macintosh PackBits scheme.
"""
from __future__ import annotations

from itertools import groupby

import numpy as np

from .analysis import run_arrays
from .errors import InvalidRunByteError, TruncatedInputError

MAX_PAIR_RUN = 255
MAX_PACKBITS_RUN = 128


def rle_encode(data) -> bytes:
    """Greedy split: runs over 255 become 255-pairs plus one remainder pair."""
    values, lengths = run_arrays(data)
    npairs = (lengths + MAX_PAIR_RUN - 1) // MAX_PAIR_RUN
    pairs = np.empty((int(npairs.sum()), 2), dtype=np.uint8)
    pairs[:, 0] = MAX_PAIR_RUN
    pairs[:, 1] = np.repeat(values, npairs)
    pairs[np.cumsum(npairs) - 1, 0] = lengths - MAX_PAIR_RUN * (npairs - 1)
    return pairs.tobytes()


def rle_decode(data) -> bytes:
    data = bytes(data)
    if len(data) % 2:
        raise TruncatedInputError("odd-length RLE stream")
    out = bytearray()
    for i in range(0, len(data), 2):
        run = data[i]
        if run == 0:
            raise InvalidRunByteError(f"zero run at offset {i}")
        out += data[i + 1:i + 2] * run
    return bytes(out)


def packbits_encode(data) -> bytes:
    """Repeat tokens for runs of 3 or more; everything else goes into literal groups."""
    out = bytearray()
    literal = bytearray()

    def flush():
        for i in range(0, len(literal), MAX_PACKBITS_RUN):
            chunk = literal[i:i + MAX_PACKBITS_RUN]
            out.append(len(chunk) - 1)
            out.extend(chunk)
        literal.clear()

    for value, group in groupby(bytes(data)):
        length = sum(1 for _ in group)
        while length >= 3:
            n = min(length, MAX_PACKBITS_RUN)
            flush()
            out += bytes((257 - n, value))
            length -= n
        literal += bytes([value]) * length
    flush()
    return bytes(out)


def packbits_decode(data) -> bytes:
    data = bytes(data)
    out = bytearray()
    pos = 0
    end = len(data)
    while pos < end:
        n = data[pos]
        pos += 1
        if n < 128:
            if pos + n + 1 > end:
                raise TruncatedInputError(f"literal group cut off at offset {pos - 1}")
            out += data[pos:pos + n + 1]
            pos += n + 1
        elif n > 128:
            if pos >= end:
                raise TruncatedInputError(f"repeat token cut off at offset {pos - 1}")
            out += data[pos:pos + 1] * (257 - n)
            pos += 1
    return bytes(out)
