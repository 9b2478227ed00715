"""Minimal ONNX support: wire-format codec plus a NumPy graph executor.

Covers the operator subset used by convolutional feature backbones
(Conv, BatchNormalization, Relu, MaxPool, Add and friends); anything else
raises :class:`UnsupportedOperator`. Models are plain ONNX protobuf files
(opset >= 11), interchangeable with files produced by standard exporters.
"""

from .executor import Executor, UnsupportedOperator
from .model import (
    Attribute,
    Graph,
    Model,
    Node,
    OnnxError,
    TensorInfo,
    load_model,
    parse_model,
)
from .build import GraphBuilder

__all__ = [
    "Attribute",
    "Executor",
    "Graph",
    "GraphBuilder",
    "Model",
    "Node",
    "OnnxError",
    "TensorInfo",
    "UnsupportedOperator",
    "load_model",
    "parse_model",
]
