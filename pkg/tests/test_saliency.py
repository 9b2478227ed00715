import numpy as np
import pytest

from fastfuse.saliency import quantize256, saliency_map, saliency_raw


def brute_force_saliency(levels):
    """O(N^2) pairwise oracle: S(p) = sum_q |I(p) - I(q)| on quantized levels."""
    flat = levels.astype(np.int64).ravel()
    out = np.empty_like(flat)
    for i, v in enumerate(flat):
        out[i] = np.abs(flat - v).sum()
    return out.reshape(levels.shape)


class TestQuantize256:
    def test_endpoints(self):
        assert quantize256(np.array([[0.0]]))[0, 0] == 0
        assert quantize256(np.array([[1.0]]))[0, 0] == 255

    def test_round_half_up(self):
        assert quantize256(np.array([[0.5]]))[0, 0] == 128

    def test_idempotent_through_dequantize(self, rng):
        levels = rng.integers(0, 256, size=(16, 16)).astype(np.uint8)
        again = quantize256(levels.astype(np.float64) / 255.0)
        assert np.array_equal(levels, again)

    def test_range_contract(self):
        with pytest.raises(ValueError):
            quantize256(np.array([[1.2]]))
        with pytest.raises(ValueError):
            quantize256(np.array([[-0.1]]))


class TestSaliency:
    def test_constant_image_degenerates_to_half(self):
        assert np.all(saliency_map(np.full((7, 9), 0.3)) == 0.5)

    def test_1x4_example(self):
        p = np.array([[0.0, 0.0, 0.0, 1.0]])
        raw = saliency_raw(p)
        assert raw.tolist() == [[255, 255, 255, 765]]
        assert saliency_map(p).tolist() == [[0.0, 0.0, 0.0, 1.0]]

    def test_matches_brute_force_exactly(self, rng):
        for _ in range(10):
            p = rng.random((32, 32))
            raw = saliency_raw(p)
            oracle = brute_force_saliency(quantize256(p))
            assert np.array_equal(raw, oracle)

    def test_equal_levels_equal_saliency(self, rng):
        p = rng.integers(0, 4, size=(20, 20)).astype(np.float64) / 3.0
        raw = saliency_raw(p)
        levels = quantize256(p)
        for lv in np.unique(levels):
            vals = raw[levels == lv]
            assert np.all(vals == vals.flat[0])

    def test_normalized_range_attained(self, rng):
        p = rng.random((24, 24))
        m = saliency_map(p)
        assert m.min() == 0.0 and m.max() == 1.0

    def test_shift_invariance_on_levels(self, rng):
        # adding a constant number of levels shifts the histogram, not distances
        base = rng.integers(0, 100, size=(16, 16))
        a = saliency_raw(base.astype(np.float64) / 255.0)
        b = saliency_raw((base + 100).astype(np.float64) / 255.0)
        assert np.array_equal(a, b)
