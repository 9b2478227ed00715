"""NumPy executor for the convolutional ONNX operator subset."""

from __future__ import annotations

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from .model import Model, Node, OnnxError


class UnsupportedOperator(OnnxError):
    """Graph uses an operator outside the supported subset."""


def _conv_windows(x, kh, kw, strides, pads, dilations, fill=0.0):
    """Strided dilated window view over NCHW input, padded as requested."""
    sh, sw = strides
    dh, dw = dilations
    pt, pl, pb, pr = pads
    if any(p < 0 for p in pads):
        raise UnsupportedOperator("negative pads are not supported")
    if pt or pl or pb or pr:
        x = np.pad(x, ((0, 0), (0, 0), (pt, pb), (pl, pr)), constant_values=fill)
    span_h = dh * (kh - 1) + 1
    span_w = dw * (kw - 1) + 1
    if x.shape[2] < span_h or x.shape[3] < span_w:
        raise OnnxError(f"input {x.shape} smaller than kernel span {(span_h, span_w)}")
    v = sliding_window_view(x, (span_h, span_w), axis=(2, 3))
    return v[:, :, ::sh, ::sw, ::dh, ::dw]


def _op_conv(node: Node, x, w, b=None):
    if node.attr_str("auto_pad", "NOTSET") != "NOTSET":
        raise UnsupportedOperator("Conv auto_pad is not supported; use explicit pads")
    strides = node.attr_ints("strides", (1, 1))
    dilations = node.attr_ints("dilations", (1, 1))
    pads = node.attr_ints("pads", (0, 0, 0, 0))
    group = node.attr_int("group", 1)
    f, cg, kh, kw = w.shape
    v = _conv_windows(x, kh, kw, strides, pads, dilations)
    n, c, ho, wo = v.shape[0], v.shape[1], v.shape[2], v.shape[3]
    if c != cg * group:
        raise OnnxError(f"Conv channel mismatch: input {c}, weights {cg} x group {group}")
    outs = []
    fg = f // group
    for g in range(group):
        vg = v[:, g * cg : (g + 1) * cg]
        col = vg.transpose(0, 2, 3, 1, 4, 5).reshape(n * ho * wo, cg * kh * kw)
        wg = w[g * fg : (g + 1) * fg].reshape(fg, cg * kh * kw)
        outs.append((col @ wg.T).reshape(n, ho, wo, fg))
    out = np.concatenate(outs, axis=3).transpose(0, 3, 1, 2)
    if b is not None:
        out = out + b.reshape(1, f, 1, 1)
    return np.ascontiguousarray(out)


def _op_maxpool(node: Node, x):
    if node.attr_str("auto_pad", "NOTSET") != "NOTSET":
        raise UnsupportedOperator("MaxPool auto_pad is not supported")
    kh, kw = node.attr_ints("kernel_shape", ())
    strides = node.attr_ints("strides", (1, 1))
    dilations = node.attr_ints("dilations", (1, 1))
    pads = list(node.attr_ints("pads", (0, 0, 0, 0)))
    if node.attr_int("ceil_mode", 0):
        # extend bottom/right so every ceil-mode window exists
        pads[2] += strides[0] - 1
        pads[3] += strides[1] - 1
    v = _conv_windows(x, kh, kw, strides, pads, dilations, fill=-np.inf)
    return np.ascontiguousarray(v.max(axis=(4, 5)))


def _op_batchnorm(node: Node, x, scale, bias, mean, var):
    eps = node.attr_float("epsilon", 1e-5)
    shape = (1, x.shape[1], 1, 1)
    inv = 1.0 / np.sqrt(var + eps)
    return (x - mean.reshape(shape)) * (scale * inv).reshape(shape) + bias.reshape(shape)


_BINARY = {
    "Add": np.add,
    "Sub": np.subtract,
    "Mul": np.multiply,
    "Div": np.divide,
}


class Executor:
    """Runs a parsed model graph on NumPy inputs.

    Stateless apart from read-only weights; a single instance is safe for
    concurrent ``run`` calls from multiple threads.
    """

    def __init__(self, model: Model):
        self.model = model
        self.graph = model.graph
        if model.opset and model.opset < 11:
            raise OnnxError(f"opset {model.opset} too old; need >= 11")
        missing = {
            n.op_type
            for n in self.graph.nodes
            if n.op_type not in ("Conv", "Relu", "MaxPool", "BatchNormalization", "Identity", "Constant")
            and n.op_type not in _BINARY
        }
        if missing:
            raise UnsupportedOperator(f"unsupported operators: {sorted(missing)}")

    def run(self, feeds: dict[str, np.ndarray], outputs: list[str]) -> list[np.ndarray]:
        values: dict[str, np.ndarray] = dict(self.graph.initializers)
        values.update(feeds)
        pending = [o for o in outputs if o not in values]
        for node in self.graph.nodes:
            if not pending:
                break
            try:
                args = [values[name] for name in node.inputs if name]
            except KeyError as exc:
                raise OnnxError(f"node {node.name or node.op_type}: missing input {exc}") from exc
            op = node.op_type
            if op == "Conv":
                result = _op_conv(node, *args)
            elif op == "Relu":
                result = np.maximum(args[0], 0)
            elif op == "MaxPool":
                result = _op_maxpool(node, args[0])
            elif op == "BatchNormalization":
                result = _op_batchnorm(node, *args)
            elif op == "Identity":
                result = args[0]
            elif op == "Constant":
                a = node.attrs.get("value")
                if a is None or a.tensor is None:
                    raise UnsupportedOperator("Constant without a tensor value")
                result = a.tensor
            else:
                result = _BINARY[op](args[0], args[1])
            values[node.outputs[0]] = result
            pending = [o for o in pending if o not in values]
        missing = [o for o in outputs if o not in values]
        if missing:
            raise OnnxError(f"requested outputs not produced by the graph: {missing}")
        return [values[o] for o in outputs]
