"""On-disk framing.

Raw layout (byte mode only)::

    [32-byte packed CompBitList][payload]

Container layout::

    "MRLE" | version 0x01 | mode (0x00 byte, 0x01 bit) | mode header | payload

where the byte-mode header is the 32-byte packed list and the bit-mode
header is one flag byte (bit 0: zeros compressible, bit 1: ones
compressible) followed by the original bit count as a little-endian u64.
"""
from __future__ import annotations

import struct
from dataclasses import dataclass
from typing import Union

from .analysis import PACKED_SIZE, CompBitList, pack_comp_bit_list, unpack_comp_bit_list
from .codec_bit import BitCompList, BitString, decode_bits, encode_bits
from .codec_byte import mrle_decode, mrle_encode
from .errors import FormatError, TruncatedInputError

MAGIC = b"MRLE"
VERSION = 1
MODE_BYTE = "byte"
MODE_BIT = "bit"
_MODE_CODES = {MODE_BYTE: 0, MODE_BIT: 1}
_PREFIX = len(MAGIC) + 2
_BIT_COUNT = struct.Struct("<Q")

BYTE_HEADER_SIZE = _PREFIX + PACKED_SIZE
BIT_HEADER_SIZE = _PREFIX + 1 + _BIT_COUNT.size


@dataclass(frozen=True)
class Container:
    mode: str
    flags: Union[CompBitList, BitCompList]
    payload: bytes
    original_bit_count: int | None = None

    def __post_init__(self):
        if self.mode == MODE_BYTE:
            if not isinstance(self.flags, CompBitList) or self.original_bit_count is not None:
                raise ValueError("byte mode needs a CompBitList and no bit count")
        elif self.mode == MODE_BIT:
            if not isinstance(self.flags, BitCompList) or self.original_bit_count is None:
                raise ValueError("bit mode needs a BitCompList and a bit count")
        else:
            raise ValueError(f"unknown mode {self.mode!r}")


def write_container(c: Container) -> bytes:
    head = MAGIC + bytes((VERSION, _MODE_CODES[c.mode]))
    if c.mode == MODE_BYTE:
        return head + pack_comp_bit_list(c.flags) + c.payload
    return head + bytes((c.flags.to_byte(),)) + _BIT_COUNT.pack(c.original_bit_count) + c.payload


def read_container(data) -> Container:
    data = bytes(data)
    if data[:len(MAGIC)] != MAGIC[:min(len(data), len(MAGIC))]:
        raise FormatError("bad magic")
    if len(data) < _PREFIX:
        raise TruncatedInputError("container header cut short")
    version, mode_code = data[4], data[5]
    if version != VERSION:
        raise FormatError(f"unsupported version {version}")
    if mode_code == 0:
        if len(data) < BYTE_HEADER_SIZE:
            raise TruncatedInputError("byte-mode header cut short")
        flags = unpack_comp_bit_list(data[_PREFIX:BYTE_HEADER_SIZE])
        return Container(MODE_BYTE, flags, data[BYTE_HEADER_SIZE:])
    if mode_code == 1:
        if len(data) < BIT_HEADER_SIZE:
            raise TruncatedInputError("bit-mode header cut short")
        flag_byte = data[_PREFIX]
        if flag_byte & ~0b11:
            raise FormatError(f"reserved flag bits set: {flag_byte:#04x}")
        (count,) = _BIT_COUNT.unpack_from(data, _PREFIX + 1)
        return Container(MODE_BIT, BitCompList.from_byte(flag_byte), data[BIT_HEADER_SIZE:], count)
    raise FormatError(f"unknown mode byte {mode_code}")


def write_raw(flags: CompBitList, payload: bytes) -> bytes:
    return pack_comp_bit_list(flags) + bytes(payload)


def read_raw(data) -> tuple[CompBitList, bytes]:
    data = bytes(data)
    if len(data) < PACKED_SIZE:
        raise TruncatedInputError(f"raw stream shorter than the {PACKED_SIZE}-byte flag list")
    return unpack_comp_bit_list(data[:PACKED_SIZE]), data[PACKED_SIZE:]


def compress(data, mode: str = MODE_BYTE) -> Container:
    """Encode *data* (a byte string) into a :class:`Container`.

    In bit mode the bytes are read as a bitstream, most significant bit first.
    """
    if mode == MODE_BYTE:
        flags, payload = mrle_encode(data)
        return Container(MODE_BYTE, flags, payload)
    if mode == MODE_BIT:
        bits = BitString.from_bytes(data)
        flags, payload = encode_bits(bits)
        return Container(MODE_BIT, flags, payload.to_bytes(), bits.bit_count)
    raise ValueError(f"unknown mode {mode!r}")


def decompress_bits(c: Container) -> BitString:
    if c.mode != MODE_BIT:
        raise ValueError("not a bit-mode container")
    return decode_bits(c.flags, BitString.from_bytes(c.payload), c.original_bit_count,
                       allow_padding=True)


def decompress(c: Container) -> bytes:
    """Decode a container; bit-mode output is packed MSB first and zero padded."""
    if c.mode == MODE_BYTE:
        return mrle_decode(c.flags, c.payload)
    return decompress_bits(c).to_bytes()
