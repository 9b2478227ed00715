import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)


def smooth_field(rng, h, w, blobs=6, scale=0.25):
    """Smooth random field in [0,1] built from a few Gaussian blobs."""
    yy, xx = np.mgrid[0:h, 0:w]
    out = np.zeros((h, w))
    for _ in range(blobs):
        cy, cx = rng.uniform(0, h), rng.uniform(0, w)
        sy, sx = rng.uniform(h * 0.08, h * scale), rng.uniform(w * 0.08, w * scale)
        amp = rng.uniform(0.3, 1.0)
        out += amp * np.exp(-((yy - cy) ** 2 / (2 * sy**2) + (xx - cx) ** 2 / (2 * sx**2)))
    out -= out.min()
    m = out.max()
    return out / m if m > 0 else out


def textured_scene(rng, h, w):
    """Visible-band style scene: smooth background plus texture and edges."""
    img = 0.45 * smooth_field(rng, h, w)
    img += 0.25 * np.sin(np.linspace(0, 12 * np.pi, w))[None, :] * smooth_field(rng, h, w, 3)
    # blocky structures
    for _ in range(4):
        y0, x0 = rng.integers(0, h // 2), rng.integers(0, w // 2)
        dy, dx = rng.integers(h // 8, h // 2), rng.integers(w // 8, w // 2)
        img[y0 : y0 + dy, x0 : x0 + dx] += rng.uniform(-0.2, 0.35)
    img += 0.03 * rng.standard_normal((h, w))
    img -= img.min()
    return img / img.max()


def thermal_scene(rng, h, w):
    """Thermal-band style scene: smooth blobs with a few bright hot spots."""
    img = 0.3 * smooth_field(rng, h, w, blobs=4)
    for _ in range(3):
        cy, cx = rng.uniform(0.2 * h, 0.8 * h), rng.uniform(0.2 * w, 0.8 * w)
        sy, sx = rng.uniform(2, h * 0.06), rng.uniform(2, w * 0.06)
        yy, xx = np.mgrid[0:h, 0:w]
        img += 0.9 * np.exp(-((yy - cy) ** 2 / (2 * sy**2) + (xx - cx) ** 2 / (2 * sx**2)))
    img += 0.01 * rng.standard_normal((h, w))
    img -= img.min()
    return img / img.max()


@pytest.fixture
def scene_pair(rng):
    return textured_scene(rng, 48, 64), thermal_scene(rng, 48, 64)


@pytest.fixture(scope="session")
def demo_spec(tmp_path_factory):
    """Built-in demo backbone materialized as an on-disk ONNX model + manifest."""
    from fastfuse.demo import write_demo_model
    from fastfuse.features import ModelSpec

    root = tmp_path_factory.mktemp("models")
    manifest = write_demo_model(root)
    return ModelSpec.from_manifest(manifest, depth=3)
