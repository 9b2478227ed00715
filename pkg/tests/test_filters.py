import numpy as np
import pytest

from fastfuse.filters import GuidedFilterParams, box_filter, decompose, guided_filter
from fastfuse.kernels import numpy_backend


def naive_box_filter(p, r):
    """O(N r^2) sliding-window mean oracle with in-bounds normalization."""
    h, w = p.shape
    out = np.empty_like(p, dtype=np.float64)
    for i in range(h):
        for j in range(w):
            y0, y1 = max(0, i - r), min(h, i + r + 1)
            x0, x1 = max(0, j - r), min(w, j + r + 1)
            out[i, j] = p[y0:y1, x0:x1].mean()
    return out


def naive_guided_filter(p, guide, r, eps):
    """Direct per-window evaluation of the guided filter formula."""
    mean_i = naive_box_filter(guide, r)
    mean_p = naive_box_filter(p, r)
    cov = naive_box_filter(guide * p, r) - mean_i * mean_p
    var = naive_box_filter(guide * guide, r) - mean_i * mean_i
    a = cov / (var + eps)
    b = mean_p - a * mean_i
    return naive_box_filter(a, r) * guide + naive_box_filter(b, r)


class TestBoxFilter:
    def test_impulse_3x3(self):
        # hand-checkable case: center window covers all 9 pixels
        p = np.zeros((3, 3))
        p[1, 1] = 9.0
        out = box_filter(p, 1)
        assert out[1, 1] == pytest.approx(1.0)
        for i, j in [(0, 0), (0, 2), (2, 0), (2, 2)]:
            assert out[i, j] == pytest.approx(9 / 4)
        for i, j in [(0, 1), (1, 0), (1, 2), (2, 1)]:
            assert out[i, j] == pytest.approx(9 / 6)

    def test_constant_plane_is_fixed_point(self, rng):
        p = np.full((17, 23), 0.371)
        for r in (1, 4, 50):
            assert np.allclose(box_filter(p, r), p, atol=1e-12)

    def test_degenerate_radius_gives_global_mean(self, rng):
        p = rng.random((9, 13))
        out = box_filter(p, 20)
        assert np.allclose(out, p.mean(), atol=1e-12)

    @pytest.mark.parametrize("r", [1, 5, 17])
    def test_matches_naive_oracle(self, rng, r):
        p = rng.random((64, 64))
        assert np.max(np.abs(box_filter(p, r) - naive_box_filter(p, r))) < 1e-10

    def test_output_within_input_range(self, rng):
        p = rng.random((40, 30)) * 3 - 1
        out = box_filter(p, 5)
        assert out.min() >= p.min() - 1e-12
        assert out.max() <= p.max() + 1e-12

    def test_backends_agree(self, rng):
        p = rng.random((37, 51))
        for r in (1, 3, 9, 60):
            a = numpy_backend.box_filter(p, r)
            b = box_filter(p, r)
            assert np.max(np.abs(a - b)) < 1e-12

    def test_radius_validation(self):
        with pytest.raises(ValueError):
            box_filter(np.ones((4, 4)), 0)


class TestDecompose:
    def test_constant_plane(self):
        p = np.full((8, 8), 0.6)
        pair = decompose(p, 3)
        assert np.allclose(pair.base, p, atol=1e-12)
        assert np.allclose(pair.detail, 0.0, atol=1e-12)

    def test_exact_reconstruction(self, rng):
        for _ in range(5):
            p = rng.random((31, 45))
            pair = decompose(p, 7)
            assert np.max(np.abs(pair.base + pair.detail - p)) < 1e-12

    def test_step_image_detail_localized(self):
        p = np.zeros((16, 16))
        p[:, 8:] = 1.0
        pair = decompose(p, 1)
        expected = p - naive_box_filter(p, 1)
        assert np.allclose(pair.detail, expected, atol=1e-12)
        # residual lives only within one pixel of the step
        assert np.all(np.abs(pair.detail[:, :7]) < 1e-12)
        assert np.all(np.abs(pair.detail[:, 9:]) < 1e-12)
        assert np.any(np.abs(pair.detail[:, 7:9]) > 0.1)


class TestGuidedFilter:
    def test_constant_guide_reduces_to_double_box(self, rng):
        p = rng.random((20, 20))
        guide = np.full((20, 20), 0.25)
        out = guided_filter(p, guide, GuidedFilterParams(3, 0.01))
        assert np.allclose(out, box_filter(box_filter(p, 3), 3), atol=1e-9)

    def test_edge_preserving_identity_limit(self, rng):
        guide = rng.random((32, 32))  # per-window variance >> eps
        out = guided_filter(guide, guide, GuidedFilterParams(2, 1e-9))
        assert np.max(np.abs(out - guide)) < 1e-4

    def test_matches_naive_oracle(self, rng):
        p = rng.random((5, 5))
        guide = rng.random((5, 5))
        got = guided_filter(p, guide, GuidedFilterParams(1, 0.01))
        want = naive_guided_filter(p, guide, 1, 0.01)
        assert np.max(np.abs(got - want)) < 1e-10

    @pytest.mark.parametrize("r,eps", [(1, 1e-6), (5, 0.1), (17, 1e-6), (17, 0.1)])
    def test_matches_naive_oracle_64(self, rng, r, eps):
        p = rng.random((64, 64))
        guide = rng.random((64, 64))
        got = guided_filter(p, guide, GuidedFilterParams(r, eps))
        want = naive_guided_filter(p, guide, r, eps)
        assert np.max(np.abs(got - want)) < 1e-10

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            guided_filter(np.ones((4, 4)), np.ones((4, 5)), GuidedFilterParams(1, 0.1))

    def test_params_validation(self):
        with pytest.raises(ValueError):
            GuidedFilterParams(0, 0.1)
        with pytest.raises(ValueError):
            GuidedFilterParams(3, 0.0)
