"""Bit-vector helpers for the package-wide LSB-first convention.

Bit i of a byte is ``(byte >> i) & 1``; streams are padded with zero bits to
a byte boundary only at the very end.  Bit vectors are numpy uint8 arrays
with values in {0, 1}.
"""

from __future__ import annotations

import numpy as np

__all__ = [
    "bits_to_bytes",
    "bytes_to_bits",
    "bits_to_int",
    "int_to_bits",
]


def bytes_to_bits(data: bytes, nbits: int | None = None) -> np.ndarray:
    """Unpack bytes into a 0/1 uint8 array, low bit of each byte first."""
    buf = np.frombuffer(data, dtype=np.uint8)
    if nbits is None:
        nbits = 8 * len(data)
    if nbits > 8 * len(data):
        raise ValueError(f"need {nbits} bits but got only {8 * len(data)}")
    return np.unpackbits(buf, count=nbits, bitorder="little")


def bits_to_bytes(bits: np.ndarray) -> bytes:
    """Pack a 0/1 array into bytes, zero-padding the final byte."""
    return np.packbits(np.asarray(bits, dtype=np.uint8), bitorder="little").tobytes()


def bits_to_int(bits: np.ndarray) -> int:
    """Interpret a 0/1 array as an integer, index 0 being the low bit."""
    return int.from_bytes(bits_to_bytes(bits), "little")


def int_to_bits(value: int, nbits: int) -> np.ndarray:
    """Little-endian bit expansion of ``value`` into exactly ``nbits`` bits."""
    if value < 0 or value >> nbits:
        raise ValueError(f"value does not fit in {nbits} bits")
    data = value.to_bytes((nbits + 7) // 8, "little") if nbits else b""
    return bytes_to_bits(data, nbits)
