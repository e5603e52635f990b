"""Backend parity: the compiled kernels and the numpy fallback must agree."""

import numpy as np
import pytest

from mlfm.kernels import _numpy


def close(a, b, tol):
    # backends may accumulate in different precisions; compare with a
    # combined relative+absolute envelope
    return np.allclose(a, b, rtol=tol, atol=tol)

native = pytest.importorskip("mlfm.kernels._native")

SHAPES = [((2, 3, 8, 8), (4, 3, 3, 3), 1, 1),
          ((1, 2, 16, 16), (5, 2, 2, 2), 2, 0),
          ((2, 4, 6, 6), (4, 4, 1, 1), 1, 0)]


@pytest.mark.parametrize("dtype,tol", [(np.float32, 1e-5), (np.float64, 1e-12)])
@pytest.mark.parametrize("xshape,wshape,stride,pad", SHAPES)
class TestConvParity:
    def test_forward_backward(self, rng, dtype, tol, xshape, wshape, stride, pad):
        x = rng.standard_normal(xshape).astype(dtype)
        w = rng.standard_normal(wshape).astype(dtype)
        yn = native.conv2d_forward(x, w, stride, pad)
        yr = _numpy.conv2d_forward(x, w, stride, pad)
        assert close(yn, yr, tol)
        dy = rng.standard_normal(yn.shape).astype(dtype)
        assert close(native.conv2d_backward_x(dy, w, xshape, stride, pad),
                     _numpy.conv2d_backward_x(dy, w, xshape, stride, pad), tol)
        assert close(native.conv2d_backward_w(dy, x, wshape, stride, pad),
                     _numpy.conv2d_backward_w(dy, x, wshape, stride, pad), tol)


@pytest.mark.parametrize("kind", ["max", "avg"])
@pytest.mark.parametrize("dtype", [np.float32, np.float64])
class TestPoolParity:
    def test_forward_backward(self, rng, kind, dtype):
        x = rng.standard_normal((2, 3, 8, 8)).astype(dtype)
        yn, argn = native.pool2d_forward(x, kind, 2, 2)
        yr, argr = _numpy.pool2d_forward(x, kind, 2, 2)
        assert close(yn, yr, 1e-5)
        if kind == "max":
            assert np.array_equal(argn, argr)
        dy = rng.standard_normal(yn.shape).astype(dtype)
        assert close(native.pool2d_backward(dy, argn, x.shape, kind, 2, 2),
                     _numpy.pool2d_backward(dy, argr, x.shape, kind, 2, 2), 1e-5)

    def test_max_ties_identical(self, rng, kind, dtype):
        if kind == "avg":
            pytest.skip("tie semantics are a max-pool property")
        x = np.zeros((1, 1, 4, 4), dtype=dtype)     # all ties
        _, argn = native.pool2d_forward(x, "max", 2, 2)
        _, argr = _numpy.pool2d_forward(x, "max", 2, 2)
        assert np.array_equal(argn, argr)
        assert argn.max() == 0


@pytest.mark.parametrize("dtype,tol", [(np.float32, 1e-5), (np.float64, 1e-12)])
@pytest.mark.parametrize("axis", [2, 3])
@pytest.mark.parametrize("taps_len", [2, 8, 62])
class TestDwtParity:
    def test_down_up(self, rng, dtype, tol, axis, taps_len):
        taps_a = rng.standard_normal(taps_len)
        taps_b = rng.standard_normal(taps_len)
        x = rng.standard_normal((2, 3, 8, 8)).astype(dtype)
        dn = native.dwt_down(x, taps_a, axis)
        dr = _numpy.dwt_down(x, taps_a, axis)
        assert close(dn, dr, tol)
        an, bn = native.dwt_down_pair(x, taps_a, taps_b, axis)
        ar, br = _numpy.dwt_down_pair(x, taps_a, taps_b, axis)
        assert close(an, ar, tol) and close(bn, br, tol)
        y = rng.standard_normal(dn.shape).astype(dtype)
        un = native.dwt_up(y, taps_a, axis, 8)
        ur = _numpy.dwt_up(y, taps_a, axis, 8)
        assert close(un, ur, tol)
        pn = native.dwt_up_pair(y, y, taps_a, taps_b, axis, 8)
        pr = _numpy.dwt_up_pair(y, y, taps_a, taps_b, axis, 8)
        assert close(pn, pr, tol)
