"""ONNX model writer used by the demo backbone and the test suite."""

from __future__ import annotations

import numpy as np

from . import wire

_NP_TO_ONNX = {
    np.dtype("float32"): 1,
    np.dtype("uint8"): 2,
    np.dtype("int8"): 3,
    np.dtype("int32"): 6,
    np.dtype("int64"): 7,
    np.dtype("bool"): 9,
    np.dtype("float64"): 11,
}


def _tensor_proto(name: str, array: np.ndarray) -> bytes:
    array = np.ascontiguousarray(array)
    dt = _NP_TO_ONNX[array.dtype]
    out = wire.packed_varints_field(1, array.shape)
    out += wire.varint_field(2, dt)
    out += wire.string_field(8, name)
    out += wire.bytes_field(9, array.astype(array.dtype.newbyteorder("<")).tobytes())
    return out


def _attr(name: str, value) -> bytes:
    out = wire.string_field(1, name)
    if isinstance(value, int):
        out += wire.varint_field(3, value) + wire.varint_field(20, 2)  # INT
    elif isinstance(value, float):
        out += wire.float_field(2, value) + wire.varint_field(20, 1)  # FLOAT
    elif isinstance(value, str):
        out += wire.bytes_field(4, value.encode()) + wire.varint_field(20, 3)  # STRING
    elif isinstance(value, np.ndarray):
        out += wire.bytes_field(5, _tensor_proto("", value)) + wire.varint_field(20, 4)
    elif isinstance(value, (list, tuple)) and all(isinstance(v, int) for v in value):
        out += wire.packed_varints_field(8, value) + wire.varint_field(20, 7)  # INTS
    else:
        raise TypeError(f"unsupported attribute value for {name!r}: {value!r}")
    return out


def _value_info(name: str, elem_type: int, shape) -> bytes:
    dims = b""
    for d in shape:
        if isinstance(d, int):
            dims += wire.bytes_field(1, wire.varint_field(1, d))
        else:  # symbolic dimension
            dims += wire.bytes_field(1, wire.string_field(2, str(d)))
    tensor_type = wire.varint_field(1, elem_type) + wire.bytes_field(2, dims)
    type_proto = wire.bytes_field(1, tensor_type)
    return wire.string_field(1, name) + wire.bytes_field(2, type_proto)


class GraphBuilder:
    """Assemble a small ONNX model; nodes must be added in topological order."""

    def __init__(self, name: str = "graph", opset: int = 13):
        self.name = name
        self.opset = opset
        self._nodes: list[bytes] = []
        self._initializers: list[bytes] = []
        self._inputs: list[bytes] = []
        self._outputs: list[bytes] = []

    def add_input(self, name: str, shape, elem_type: int = 1):
        self._inputs.append(_value_info(name, elem_type, shape))

    def add_output(self, name: str, shape, elem_type: int = 1):
        self._outputs.append(_value_info(name, elem_type, shape))

    def add_initializer(self, name: str, array: np.ndarray):
        self._initializers.append(_tensor_proto(name, array))

    def add_node(self, op_type: str, inputs, outputs, **attrs):
        payload = b""
        for i in inputs:
            payload += wire.string_field(1, i)
        for o in outputs:
            payload += wire.string_field(2, o)
        payload += wire.string_field(4, op_type)
        for k, v in attrs.items():
            payload += wire.bytes_field(5, _attr(k, v))
        self._nodes.append(payload)

    def to_bytes(self) -> bytes:
        graph = b"".join(wire.bytes_field(1, n) for n in self._nodes)
        graph += wire.string_field(2, self.name)
        graph += b"".join(wire.bytes_field(5, t) for t in self._initializers)
        graph += b"".join(wire.bytes_field(11, i) for i in self._inputs)
        graph += b"".join(wire.bytes_field(12, o) for o in self._outputs)
        model = wire.varint_field(1, 8)  # ir_version
        model += wire.string_field(2, "fastfuse.onnxlite")
        model += wire.bytes_field(7, graph)
        model += wire.bytes_field(8, wire.string_field(1, "") + wire.varint_field(2, self.opset))
        return model
