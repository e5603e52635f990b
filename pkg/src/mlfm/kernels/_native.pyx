# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled kernels for the hot inner loops.

Same contracts as mlfm.kernels._numpy.  The memory-bound parts (im2col,
col2im, pooling, periodized wavelet passes) run as C loops; the matrix
products stay on numpy's BLAS, which both backends share.  Everything is
single-threaded and deterministic.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()

ctypedef fused real:
    float
    double


# ---------------------------------------------------------------------------
# convolution

cdef void _pack_cols(real[:, :, :, ::1] xp, real[:, ::1] cols,
                     Py_ssize_t kh, Py_ssize_t kw, Py_ssize_t stride,
                     Py_ssize_t oh, Py_ssize_t ow) noexcept nogil:
    cdef Py_ssize_t n = xp.shape[0], cin = xp.shape[1]
    cdef Py_ssize_t b, c, i, j, oy, ox, row, col
    for b in range(n):
        for oy in range(oh):
            for ox in range(ow):
                row = (b * oh + oy) * ow + ox
                col = 0
                for c in range(cin):
                    for i in range(kh):
                        for j in range(kw):
                            cols[row, col] = xp[b, c, oy * stride + i, ox * stride + j]
                            col += 1


cdef void _scatter_cols(real[:, :, :, ::1] dxp, real[:, ::1] dcols,
                        Py_ssize_t kh, Py_ssize_t kw, Py_ssize_t stride,
                        Py_ssize_t oh, Py_ssize_t ow) noexcept nogil:
    cdef Py_ssize_t n = dxp.shape[0], cin = dxp.shape[1]
    cdef Py_ssize_t b, c, i, j, oy, ox, row, col
    for b in range(n):
        for oy in range(oh):
            for ox in range(ow):
                row = (b * oh + oy) * ow + ox
                col = 0
                for c in range(cin):
                    for i in range(kh):
                        for j in range(kw):
                            dxp[b, c, oy * stride + i, ox * stride + j] += dcols[row, col]
                            col += 1


def _pad(x, pad):
    if pad:
        return np.pad(x, ((0, 0), (0, 0), (pad, pad), (pad, pad)))
    return x


def _im2col(xp, kh, kw, stride, oh, ow):
    n, cin = xp.shape[0], xp.shape[1]
    cols = np.empty((n * oh * ow, cin * kh * kw), dtype=xp.dtype)
    if xp.dtype == np.float32:
        _pack_cols[float](xp, cols, kh, kw, stride, oh, ow)
    else:
        _pack_cols[double](xp, cols, kh, kw, stride, oh, ow)
    return cols


def conv2d_forward(x, w, stride, pad):
    x = np.ascontiguousarray(x)
    n, cin, h, wd = x.shape
    cout, _, kh, kw = w.shape
    xp = _pad(x, pad)
    oh = (h + 2 * pad - kh) // stride + 1
    ow = (wd + 2 * pad - kw) // stride + 1
    cols = _im2col(xp, kh, kw, stride, oh, ow)
    y = cols @ w.reshape(cout, -1).T
    return np.ascontiguousarray(y.reshape(n, oh, ow, cout).transpose(0, 3, 1, 2))


def conv2d_backward_x(dy, w, x_shape, stride, pad):
    n, cin, h, wd = x_shape
    cout, _, kh, kw = w.shape
    oh, ow = dy.shape[2], dy.shape[3]
    dy2 = np.ascontiguousarray(dy.transpose(0, 2, 3, 1)).reshape(-1, cout)
    dcols = np.ascontiguousarray(dy2 @ w.reshape(cout, -1))
    dxp = np.zeros((n, cin, h + 2 * pad, wd + 2 * pad), dtype=dy.dtype)
    if dy.dtype == np.float32:
        _scatter_cols[float](dxp, dcols, kh, kw, stride, oh, ow)
    else:
        _scatter_cols[double](dxp, dcols, kh, kw, stride, oh, ow)
    if pad:
        return np.ascontiguousarray(dxp[:, :, pad:-pad, pad:-pad])
    return dxp


def conv2d_backward_w(dy, x, w_shape, stride, pad):
    x = np.ascontiguousarray(x)
    cout, cin, kh, kw = w_shape
    xp = _pad(x, pad)
    oh, ow = dy.shape[2], dy.shape[3]
    cols = _im2col(xp, kh, kw, stride, oh, ow)
    dy2 = np.ascontiguousarray(dy.transpose(0, 2, 3, 1)).reshape(-1, cout)
    return (dy2.T @ cols).reshape(w_shape)


# ---------------------------------------------------------------------------
# pooling

cdef void _pool_max(real[:, :, :, ::1] x, real[:, :, :, ::1] y,
                    long long[:, :, :, ::1] arg,
                    Py_ssize_t k, Py_ssize_t s) noexcept nogil:
    cdef Py_ssize_t n = y.shape[0], c = y.shape[1], oh = y.shape[2], ow = y.shape[3]
    cdef Py_ssize_t b, ch, oy, ox, i, j, best
    cdef real v, cur
    for b in range(n):
        for ch in range(c):
            for oy in range(oh):
                for ox in range(ow):
                    best = 0
                    v = x[b, ch, oy * s, ox * s]
                    for i in range(k):
                        for j in range(k):
                            cur = x[b, ch, oy * s + i, ox * s + j]
                            if cur > v:       # strict: first max wins ties
                                v = cur
                                best = i * k + j
                    y[b, ch, oy, ox] = v
                    arg[b, ch, oy, ox] = best


cdef void _pool_avg(real[:, :, :, ::1] x, real[:, :, :, ::1] y,
                    Py_ssize_t k, Py_ssize_t s) noexcept nogil:
    cdef Py_ssize_t n = y.shape[0], c = y.shape[1], oh = y.shape[2], ow = y.shape[3]
    cdef Py_ssize_t b, ch, oy, ox, i, j
    cdef double acc
    for b in range(n):
        for ch in range(c):
            for oy in range(oh):
                for ox in range(ow):
                    acc = 0
                    for i in range(k):
                        for j in range(k):
                            acc += x[b, ch, oy * s + i, ox * s + j]
                    y[b, ch, oy, ox] = <real> (acc / (k * k))


def pool2d_forward(x, kind, k, s):
    x = np.ascontiguousarray(x)
    n, c, h, w = x.shape
    oh, ow = (h - k) // s + 1, (w - k) // s + 1
    y = np.empty((n, c, oh, ow), dtype=x.dtype)
    if kind == "max":
        arg = np.empty((n, c, oh, ow), dtype=np.int64)
        if x.dtype == np.float32:
            _pool_max[float](x, y, arg, k, s)
        else:
            _pool_max[double](x, y, arg, k, s)
        return y, arg
    if x.dtype == np.float32:
        _pool_avg[float](x, y, k, s)
    else:
        _pool_avg[double](x, y, k, s)
    return y, None


cdef void _pool_max_bwd(real[:, :, :, ::1] dy, long long[:, :, :, ::1] arg,
                        real[:, :, :, ::1] dx, Py_ssize_t k, Py_ssize_t s) noexcept nogil:
    cdef Py_ssize_t n = dy.shape[0], c = dy.shape[1], oh = dy.shape[2], ow = dy.shape[3]
    cdef Py_ssize_t b, ch, oy, ox, a
    for b in range(n):
        for ch in range(c):
            for oy in range(oh):
                for ox in range(ow):
                    a = arg[b, ch, oy, ox]
                    dx[b, ch, oy * s + a // k, ox * s + a % k] += dy[b, ch, oy, ox]


cdef void _pool_avg_bwd(real[:, :, :, ::1] dy, real[:, :, :, ::1] dx,
                        Py_ssize_t k, Py_ssize_t s) noexcept nogil:
    cdef Py_ssize_t n = dy.shape[0], c = dy.shape[1], oh = dy.shape[2], ow = dy.shape[3]
    cdef Py_ssize_t b, ch, oy, ox, i, j
    cdef real g
    for b in range(n):
        for ch in range(c):
            for oy in range(oh):
                for ox in range(ow):
                    g = dy[b, ch, oy, ox] / (k * k)
                    for i in range(k):
                        for j in range(k):
                            dx[b, ch, oy * s + i, ox * s + j] += g


def pool2d_backward(dy, arg, x_shape, kind, k, s):
    dy = np.ascontiguousarray(dy)
    dx = np.zeros(x_shape, dtype=dy.dtype)
    if kind == "max":
        if dy.dtype == np.float32:
            _pool_max_bwd[float](dy, arg, dx, k, s)
        else:
            _pool_max_bwd[double](dy, arg, dx, k, s)
    else:
        if dy.dtype == np.float32:
            _pool_avg_bwd[float](dy, dx, k, s)
        else:
            _pool_avg_bwd[double](dy, dx, k, s)
    return dx


# ---------------------------------------------------------------------------
# periodized wavelet passes over NCHW, axis 2 (vertical) or 3 (horizontal)

cdef void _down_rows(real[:, ::1] x, real[:, ::1] y, double[::1] taps) noexcept nogil:
    # filter along the last axis of (rows, L)
    cdef Py_ssize_t rows = x.shape[0], L = x.shape[1], half = L // 2
    cdef Py_ssize_t F = taps.shape[0], r, k, m
    cdef double acc
    for r in range(rows):
        for k in range(half):
            acc = 0
            for m in range(F):
                acc += taps[m] * x[r, (2 * k + m) % L]
            y[r, k] = <real> acc


cdef void _down_rows_pair(real[:, ::1] x, real[:, ::1] ya, real[:, ::1] yb,
                          double[::1] ta, double[::1] tb) noexcept nogil:
    cdef Py_ssize_t rows = x.shape[0], L = x.shape[1], half = L // 2
    cdef Py_ssize_t F = ta.shape[0], r, k, m, idx
    cdef double acc_a, acc_b, v
    for r in range(rows):
        for k in range(half):
            acc_a = 0
            acc_b = 0
            for m in range(F):
                idx = (2 * k + m) % L
                v = x[r, idx]
                acc_a += ta[m] * v
                acc_b += tb[m] * v
            ya[r, k] = <real> acc_a
            yb[r, k] = <real> acc_b


cdef void _up_rows(real[:, ::1] y, real[:, ::1] out, double[::1] taps) noexcept nogil:
    cdef Py_ssize_t rows = y.shape[0], half = y.shape[1]
    cdef Py_ssize_t L = out.shape[1], F = taps.shape[0], r, k, m
    cdef double v
    for r in range(rows):
        for k in range(half):
            v = y[r, k]
            for m in range(F):
                out[r, (2 * k + m) % L] += <real> (taps[m] * v)


cdef void _up_rows_pair(real[:, ::1] ya, real[:, ::1] yb, real[:, ::1] out,
                        double[::1] ta, double[::1] tb) noexcept nogil:
    cdef Py_ssize_t rows = ya.shape[0], half = ya.shape[1]
    cdef Py_ssize_t L = out.shape[1], F = ta.shape[0], r, k, m
    cdef double va, vb
    for r in range(rows):
        for k in range(half):
            va = ya[r, k]
            vb = yb[r, k]
            for m in range(F):
                out[r, (2 * k + m) % L] += <real> (ta[m] * va + tb[m] * vb)


cdef void _down_mid(real[:, :, ::1] x, real[:, :, ::1] y, double[::1] taps) noexcept nogil:
    # filter along the middle axis of (rows, L, W)
    cdef Py_ssize_t rows = x.shape[0], L = x.shape[1], W = x.shape[2]
    cdef Py_ssize_t half = L // 2, F = taps.shape[0], r, k, m, w, idx
    cdef double f
    for r in range(rows):
        for k in range(half):
            for w in range(W):
                y[r, k, w] = 0
        for m in range(F):
            f = taps[m]
            for k in range(half):
                idx = (2 * k + m) % L
                for w in range(W):
                    y[r, k, w] += <real> (f * x[r, idx, w])


cdef void _down_mid_pair(real[:, :, ::1] x, real[:, :, ::1] ya, real[:, :, ::1] yb,
                         double[::1] ta, double[::1] tb) noexcept nogil:
    cdef Py_ssize_t rows = x.shape[0], L = x.shape[1], W = x.shape[2]
    cdef Py_ssize_t half = L // 2, F = ta.shape[0], r, k, m, w, idx
    cdef double fa, fb
    for r in range(rows):
        for k in range(half):
            for w in range(W):
                ya[r, k, w] = 0
                yb[r, k, w] = 0
        for m in range(F):
            fa = ta[m]
            fb = tb[m]
            for k in range(half):
                idx = (2 * k + m) % L
                for w in range(W):
                    ya[r, k, w] += <real> (fa * x[r, idx, w])
                    yb[r, k, w] += <real> (fb * x[r, idx, w])


cdef void _up_mid(real[:, :, ::1] y, real[:, :, ::1] out, double[::1] taps) noexcept nogil:
    cdef Py_ssize_t rows = y.shape[0], half = y.shape[1], W = y.shape[2]
    cdef Py_ssize_t L = out.shape[1], F = taps.shape[0], r, k, m, w, idx
    cdef double f
    for r in range(rows):
        for m in range(F):
            f = taps[m]
            for k in range(half):
                idx = (2 * k + m) % L
                for w in range(W):
                    out[r, idx, w] += <real> (f * y[r, k, w])


cdef void _up_mid_pair(real[:, :, ::1] ya, real[:, :, ::1] yb, real[:, :, ::1] out,
                       double[::1] ta, double[::1] tb) noexcept nogil:
    cdef Py_ssize_t rows = ya.shape[0], half = ya.shape[1], W = ya.shape[2]
    cdef Py_ssize_t L = out.shape[1], F = ta.shape[0], r, k, m, w, idx
    cdef double fa, fb
    for r in range(rows):
        for m in range(F):
            fa = ta[m]
            fb = tb[m]
            for k in range(half):
                idx = (2 * k + m) % L
                for w in range(W):
                    out[r, idx, w] += <real> (fa * ya[r, k, w] + fb * yb[r, k, w])


def _shape_out(x, axis, length):
    shape = list(x.shape)
    shape[axis] = length
    return tuple(shape)


def dwt_down(x, taps, axis):
    x = np.ascontiguousarray(x)
    L = x.shape[axis]
    y = np.empty(_shape_out(x, axis, L // 2), dtype=x.dtype)
    t = np.ascontiguousarray(taps, dtype=np.float64)
    f32 = x.dtype == np.float32
    if axis == x.ndim - 1:
        xv, yv = x.reshape(-1, L), y.reshape(-1, L // 2)
        if f32:
            _down_rows[float](xv, yv, t)
        else:
            _down_rows[double](xv, yv, t)
    else:
        W = int(np.prod(x.shape[axis + 1:]))
        xv, yv = x.reshape(-1, L, W), y.reshape(-1, L // 2, W)
        if f32:
            _down_mid[float](xv, yv, t)
        else:
            _down_mid[double](xv, yv, t)
    return y


def dwt_down_pair(x, taps_a, taps_b, axis):
    x = np.ascontiguousarray(x)
    L = x.shape[axis]
    ya = np.empty(_shape_out(x, axis, L // 2), dtype=x.dtype)
    yb = np.empty_like(ya)
    ta = np.ascontiguousarray(taps_a, dtype=np.float64)
    tb = np.ascontiguousarray(taps_b, dtype=np.float64)
    f32 = x.dtype == np.float32
    if axis == x.ndim - 1:
        xv = x.reshape(-1, L)
        av, bv = ya.reshape(-1, L // 2), yb.reshape(-1, L // 2)
        if f32:
            _down_rows_pair[float](xv, av, bv, ta, tb)
        else:
            _down_rows_pair[double](xv, av, bv, ta, tb)
    else:
        W = int(np.prod(x.shape[axis + 1:]))
        xv = x.reshape(-1, L, W)
        av, bv = ya.reshape(-1, L // 2, W), yb.reshape(-1, L // 2, W)
        if f32:
            _down_mid_pair[float](xv, av, bv, ta, tb)
        else:
            _down_mid_pair[double](xv, av, bv, ta, tb)
    return ya, yb


def dwt_up(y, taps, axis, L):
    y = np.ascontiguousarray(y)
    out = np.zeros(_shape_out(y, axis, L), dtype=y.dtype)
    t = np.ascontiguousarray(taps, dtype=np.float64)
    f32 = y.dtype == np.float32
    if axis == y.ndim - 1:
        yv, ov = y.reshape(-1, y.shape[axis]), out.reshape(-1, L)
        if f32:
            _up_rows[float](yv, ov, t)
        else:
            _up_rows[double](yv, ov, t)
    else:
        W = int(np.prod(y.shape[axis + 1:]))
        yv, ov = y.reshape(-1, y.shape[axis], W), out.reshape(-1, L, W)
        if f32:
            _up_mid[float](yv, ov, t)
        else:
            _up_mid[double](yv, ov, t)
    return out


def dwt_up_pair(ya, yb, taps_a, taps_b, axis, L):
    ya = np.ascontiguousarray(ya)
    yb = np.ascontiguousarray(yb)
    out = np.zeros(_shape_out(ya, axis, L), dtype=ya.dtype)
    ta = np.ascontiguousarray(taps_a, dtype=np.float64)
    tb = np.ascontiguousarray(taps_b, dtype=np.float64)
    f32 = ya.dtype == np.float32
    half = ya.shape[axis]
    if axis == ya.ndim - 1:
        av, bv, ov = ya.reshape(-1, half), yb.reshape(-1, half), out.reshape(-1, L)
        if f32:
            _up_rows_pair[float](av, bv, ov, ta, tb)
        else:
            _up_rows_pair[double](av, bv, ov, ta, tb)
    else:
        W = int(np.prod(ya.shape[axis + 1:]))
        av = ya.reshape(-1, half, W)
        bv = yb.reshape(-1, half, W)
        ov = out.reshape(-1, L, W)
        if f32:
            _up_mid_pair[float](av, bv, ov, ta, tb)
        else:
            _up_mid_pair[double](av, bv, ov, ta, tb)
    return out
