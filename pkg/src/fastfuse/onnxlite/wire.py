"""Protobuf wire-format primitives (the subset the ONNX schema needs)."""

from __future__ import annotations

import struct

VARINT = 0
FIXED64 = 1
LENGTH = 2
FIXED32 = 5


class WireError(ValueError):
    """Malformed protobuf payload."""


def read_varint(data: bytes, pos: int) -> tuple[int, int]:
    result = 0
    shift = 0
    while True:
        if pos >= len(data):
            raise WireError("truncated varint")
        b = data[pos]
        pos += 1
        result |= (b & 0x7F) << shift
        if not b & 0x80:
            return result, pos
        shift += 7
        if shift > 70:
            raise WireError("varint too long")


def as_signed64(v: int) -> int:
    return v - (1 << 64) if v >= (1 << 63) else v


def iter_fields(data: bytes):
    """Yield (field_number, wire_type, value) triples.

    LENGTH fields yield bytes; VARINT yields unsigned int; FIXED32/FIXED64
    yield raw 4/8-byte chunks.
    """
    pos = 0
    n = len(data)
    while pos < n:
        tag, pos = read_varint(data, pos)
        field, wtype = tag >> 3, tag & 0x7
        if wtype == VARINT:
            value, pos = read_varint(data, pos)
        elif wtype == LENGTH:
            size, pos = read_varint(data, pos)
            if pos + size > n:
                raise WireError("truncated length-delimited field")
            value = data[pos : pos + size]
            pos += size
        elif wtype == FIXED32:
            value = data[pos : pos + 4]
            pos += 4
        elif wtype == FIXED64:
            value = data[pos : pos + 8]
            pos += 8
        else:
            raise WireError(f"unsupported wire type {wtype}")
        if pos > n:
            raise WireError("truncated field payload")
        yield field, wtype, value


def decode_packed_varints(value, wtype, *, signed=False) -> list[int]:
    """Repeated int64 field: accepts packed bytes or a single unpacked varint."""
    if wtype == VARINT:
        return [as_signed64(value) if signed else value]
    out = []
    pos = 0
    while pos < len(value):
        v, pos = read_varint(value, pos)
        out.append(as_signed64(v) if signed else v)
    return out


def decode_packed_floats(value, wtype) -> list[float]:
    if wtype == FIXED32:
        return [struct.unpack("<f", value)[0]]
    if len(value) % 4:
        raise WireError("packed float field not a multiple of 4 bytes")
    return list(struct.unpack(f"<{len(value) // 4}f", value))


# --- encoding ---------------------------------------------------------------


def encode_varint(v: int) -> bytes:
    if v < 0:
        v &= (1 << 64) - 1
    out = bytearray()
    while True:
        b = v & 0x7F
        v >>= 7
        if v:
            out.append(b | 0x80)
        else:
            out.append(b)
            return bytes(out)


def tag(field: int, wtype: int) -> bytes:
    return encode_varint((field << 3) | wtype)


def varint_field(field: int, v: int) -> bytes:
    return tag(field, VARINT) + encode_varint(v)


def bytes_field(field: int, payload: bytes) -> bytes:
    return tag(field, LENGTH) + encode_varint(len(payload)) + payload


def string_field(field: int, s: str) -> bytes:
    return bytes_field(field, s.encode("utf-8"))


def float_field(field: int, v: float) -> bytes:
    return tag(field, FIXED32) + struct.pack("<f", v)


def packed_varints_field(field: int, values) -> bytes:
    payload = b"".join(encode_varint(v) for v in values)
    return bytes_field(field, payload)
