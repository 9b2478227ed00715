"""Decoded ONNX model structures.

Field numbers follow the onnx.proto schema. Only the pieces needed to run
inference are retained: graph topology, node attributes, and initializer
tensors (decoded straight into NumPy arrays).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import wire
from .wire import WireError, iter_fields


class OnnxError(ValueError):
    """Unreadable or unsupported ONNX payload."""


# TensorProto.DataType -> numpy dtype
_DTYPES = {
    1: np.dtype("<f4"),
    2: np.dtype("u1"),
    3: np.dtype("i1"),
    6: np.dtype("<i4"),
    7: np.dtype("<i8"),
    9: np.dtype("bool"),
    11: np.dtype("<f8"),
}


@dataclass
class TensorInfo:
    name: str
    array: np.ndarray


@dataclass
class Attribute:
    name: str
    type: int = 0
    i: int = 0
    f: float = 0.0
    s: bytes = b""
    ints: list[int] = field(default_factory=list)
    floats: list[float] = field(default_factory=list)
    tensor: np.ndarray | None = None


@dataclass
class Node:
    op_type: str
    name: str = ""
    inputs: list[str] = field(default_factory=list)
    outputs: list[str] = field(default_factory=list)
    attrs: dict[str, Attribute] = field(default_factory=dict)

    def attr_ints(self, name: str, default) -> list[int]:
        a = self.attrs.get(name)
        return list(a.ints) if a is not None else list(default)

    def attr_int(self, name: str, default: int) -> int:
        a = self.attrs.get(name)
        return a.i if a is not None else default

    def attr_float(self, name: str, default: float) -> float:
        a = self.attrs.get(name)
        return a.f if a is not None else default

    def attr_str(self, name: str, default: str) -> str:
        a = self.attrs.get(name)
        return a.s.decode("utf-8") if a is not None else default


@dataclass
class Graph:
    name: str = ""
    nodes: list[Node] = field(default_factory=list)
    initializers: dict[str, np.ndarray] = field(default_factory=dict)
    inputs: list[str] = field(default_factory=list)
    outputs: list[str] = field(default_factory=list)


@dataclass
class Model:
    ir_version: int = 0
    opset: int = 0
    graph: Graph = field(default_factory=Graph)


def _parse_tensor(data: bytes) -> TensorInfo:
    dims: list[int] = []
    data_type = 0
    raw = None
    float_data: list[float] = []
    int_data: list[int] = []
    double_data: list[float] = []
    name = ""
    for f, wtype, value in iter_fields(data):
        if f == 1:
            dims.extend(wire.decode_packed_varints(value, wtype, signed=True))
        elif f == 2:
            data_type = value
        elif f == 4:
            float_data.extend(wire.decode_packed_floats(value, wtype))
        elif f in (5, 7):
            int_data.extend(wire.decode_packed_varints(value, wtype, signed=True))
        elif f == 8:
            name = value.decode("utf-8")
        elif f == 9:
            raw = value
        elif f == 10:
            if wtype == wire.FIXED64:
                double_data.extend(np.frombuffer(value, "<f8").tolist())
            else:
                double_data.extend(np.frombuffer(value, "<f8").tolist())
        elif f == 13:
            raise OnnxError("external tensor data is not supported")
    dtype = _DTYPES.get(data_type)
    if dtype is None:
        raise OnnxError(f"unsupported tensor data type {data_type} for {name!r}")
    if raw is not None:
        arr = np.frombuffer(raw, dtype=dtype)
    elif float_data:
        arr = np.asarray(float_data, dtype=dtype)
    elif double_data:
        arr = np.asarray(double_data, dtype=dtype)
    elif int_data:
        arr = np.asarray(int_data, dtype=dtype)
    else:
        arr = np.zeros(0, dtype=dtype)
    try:
        arr = arr.reshape(dims)
    except ValueError as exc:
        raise OnnxError(f"tensor {name!r}: data does not match dims {dims}") from exc
    return TensorInfo(name=name, array=arr)


def _parse_attribute(data: bytes) -> Attribute:
    attr = Attribute(name="")
    for f, wtype, value in iter_fields(data):
        if f == 1:
            attr.name = value.decode("utf-8")
        elif f == 2:
            attr.f = wire.decode_packed_floats(value, wtype)[0]
        elif f == 3:
            attr.i = wire.as_signed64(value)
        elif f == 4:
            attr.s = value
        elif f == 5:
            attr.tensor = _parse_tensor(value).array
        elif f == 7:
            attr.floats.extend(wire.decode_packed_floats(value, wtype))
        elif f == 8:
            attr.ints.extend(wire.decode_packed_varints(value, wtype, signed=True))
        elif f == 20:
            attr.type = value
    return attr


def _parse_node(data: bytes) -> Node:
    node = Node(op_type="")
    for f, wtype, value in iter_fields(data):
        if f == 1:
            node.inputs.append(value.decode("utf-8"))
        elif f == 2:
            node.outputs.append(value.decode("utf-8"))
        elif f == 3:
            node.name = value.decode("utf-8")
        elif f == 4:
            node.op_type = value.decode("utf-8")
        elif f == 5:
            attr = _parse_attribute(value)
            node.attrs[attr.name] = attr
    return node


def _value_info_name(data: bytes) -> str:
    for f, _wtype, value in iter_fields(data):
        if f == 1:
            return value.decode("utf-8")
    return ""


def _parse_graph(data: bytes) -> Graph:
    g = Graph()
    for f, _wtype, value in iter_fields(data):
        if f == 1:
            g.nodes.append(_parse_node(value))
        elif f == 2:
            g.name = value.decode("utf-8")
        elif f == 5:
            t = _parse_tensor(value)
            g.initializers[t.name] = t.array
        elif f == 11:
            g.inputs.append(_value_info_name(value))
        elif f == 12:
            g.outputs.append(_value_info_name(value))
    return g


def parse_model(data: bytes) -> Model:
    """Decode ONNX model bytes; raises OnnxError on malformed input."""
    model = Model()
    try:
        for f, _wtype, value in iter_fields(data):
            if f == 1:
                model.ir_version = value
            elif f == 7:
                model.graph = _parse_graph(value)
            elif f == 8:
                for sf, swt, sval in iter_fields(value):
                    if sf == 1:
                        domain = sval.decode("utf-8")
                        if domain not in ("", "ai.onnx"):
                            raise OnnxError(f"unsupported operator domain {domain!r}")
                    elif sf == 2:
                        model.opset = max(model.opset, sval)
    except WireError as exc:
        raise OnnxError(f"malformed ONNX file: {exc}") from exc
    if not model.graph.nodes:
        raise OnnxError("model contains no graph nodes")
    return model


def load_model(path) -> Model:
    with open(path, "rb") as fh:
        return parse_model(fh.read())
