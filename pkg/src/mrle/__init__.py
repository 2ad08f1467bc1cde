"""Run-length encoding that stores runs only for symbols that gain from them.

A 256-entry compressibility list (32 bytes packed) marks which byte values
are worth run-encoding.  Flagged values are written as ``value`` followed
by run bytes; all other values are copied verbatim, so the encoded form is
never more than 32 bytes larger than the input.
"""
from .analysis import (AnalysisReport, CompBitList, Run, analyze, build_comp_bit_list, compute_counters,
                       pack_comp_bit_list, saved_bytes, scan_runs, unpack_comp_bit_list)
from .baselines import packbits_decode, packbits_encode, rle_decode, rle_encode
from .codec_bit import BitCompList, BitString, analyze_bits, decode_bits, encode_bits, saved_bits
from .codec_byte import decode_run_length, encode_payload, encode_run_length, mrle_decode, mrle_encode
from .container import Container, compress, decompress, decompress_bits, read_container, read_raw, write_container, write_raw
from .errors import FormatError, InvalidRunByteError, LengthMismatchError, MrleError, TruncatedInputError

__version__ = "0.1.0"

__all__ = [
    "AnalysisReport", "BitCompList", "BitString", "CompBitList", "Container", "FormatError",
    "InvalidRunByteError", "LengthMismatchError", "MrleError", "Run", "TruncatedInputError",
    "analyze", "analyze_bits", "build_comp_bit_list", "compress", "compute_counters",
    "decode_bits", "decode_run_length", "decompress", "decompress_bits", "encode_bits", "encode_payload",
    "encode_run_length", "mrle_decode", "mrle_encode", "pack_comp_bit_list", "packbits_decode",
    "packbits_encode", "read_container", "read_raw", "rle_decode", "rle_encode", "saved_bits",
    "saved_bytes", "scan_runs", "unpack_comp_bit_list", "write_container", "write_raw",
]
