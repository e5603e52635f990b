"""Pure-numpy reference kernels.

Shared calling conventions (both backends implement exactly these):

* conv2d: NCHW inputs, OIHW weights, cross-correlation, symmetric zero pad,
  exact stride divisibility (validated by the caller).
* pool2d: max ties resolve to the first window element in row-major order.
* dwt_down / dwt_up: one periodized filtering pass along axis 2 or 3 of an
  NCHW array.  Analysis is the correlation y[k] = sum_m f[m] x[(2k+m) mod L];
  dwt_up is its exact adjoint (scatter), which doubles as the synthesis pass
  when fed reversed reconstruction taps.  The *_pair variants run two tap
  sets in one traversal (dwt_up_pair sums the two scatters).
"""

import numpy as np


def conv2d_forward(x, w, stride, pad):
    n, cin, h, wd = x.shape
    cout, _, kh, kw = w.shape
    if pad:
        x = np.pad(x, ((0, 0), (0, 0), (pad, pad), (pad, pad)))
    oh = (h + 2 * pad - kh) // stride + 1
    ow = (wd + 2 * pad - kw) // stride + 1
    cols = _im2col(x, kh, kw, stride, oh, ow)           # (n*oh*ow, cin*kh*kw)
    y = cols @ w.reshape(cout, -1).T                    # one large GEMM
    return np.ascontiguousarray(
        y.reshape(n, oh, ow, cout).transpose(0, 3, 1, 2))


def conv2d_backward_x(dy, w, x_shape, stride, pad):
    n, cin, h, wd = x_shape
    cout, _, kh, kw = w.shape
    oh, ow = dy.shape[2], dy.shape[3]
    dy2 = np.ascontiguousarray(dy.transpose(0, 2, 3, 1)).reshape(-1, cout)
    dcols = (dy2 @ w.reshape(cout, -1)).reshape(n, oh, ow, cin, kh, kw)
    dxp = np.zeros((n, cin, h + 2 * pad, wd + 2 * pad), dtype=dy.dtype)
    for i in range(kh):
        for j in range(kw):
            dxp[:, :, i:i + stride * oh:stride, j:j + stride * ow:stride] += \
                dcols[:, :, :, :, i, j].transpose(0, 3, 1, 2)
    if pad:
        return dxp[:, :, pad:-pad, pad:-pad]
    return dxp


def conv2d_backward_w(dy, x, w_shape, stride, pad):
    cout, cin, kh, kw = w_shape
    if pad:
        x = np.pad(x, ((0, 0), (0, 0), (pad, pad), (pad, pad)))
    oh, ow = dy.shape[2], dy.shape[3]
    cols = _im2col(x, kh, kw, stride, oh, ow)
    dy2 = np.ascontiguousarray(dy.transpose(0, 2, 3, 1)).reshape(-1, cout)
    return (dy2.T @ cols).reshape(w_shape)


def _im2col(xp, kh, kw, stride, oh, ow):
    n, cin = xp.shape[:2]
    sn, sc, sh, sw = xp.strides
    view = np.lib.stride_tricks.as_strided(
        xp, (n, oh, ow, cin, kh, kw),
        (sn, sh * stride, sw * stride, sc, sh, sw), writeable=False)
    return view.reshape(n * oh * ow, cin * kh * kw)


def pool2d_forward(x, kind, k, s):
    n, c, h, w = x.shape
    oh, ow = (h - k) // s + 1, (w - k) // s + 1
    sn, sc, sh, sw = x.strides
    win = np.lib.stride_tricks.as_strided(
        x, (n, c, oh, ow, k, k), (sn, sc, sh * s, sw * s, sh, sw),
        writeable=False).reshape(n, c, oh, ow, k * k)
    if kind == "max":
        arg = win.argmax(axis=-1).astype(np.int64)   # first max in scan order
        y = np.take_along_axis(win, arg[..., None], axis=-1)[..., 0]
        return np.ascontiguousarray(y), arg
    return np.ascontiguousarray(win.mean(axis=-1)), None


def pool2d_backward(dy, arg, x_shape, kind, k, s):
    n, c, h, w = x_shape
    oh, ow = dy.shape[2], dy.shape[3]
    dx = np.zeros(x_shape, dtype=dy.dtype)
    if kind == "avg":
        g = dy / (k * k)
        for i in range(k):
            for j in range(k):
                dx[:, :, i:i + s * oh:s, j:j + s * ow:s] += g
        return dx
    ki, kj = np.divmod(arg, k)
    oi = np.arange(oh)[None, None, :, None] * s
    oj = np.arange(ow)[None, None, None, :] * s
    rows = (oi + ki).reshape(n, c, -1)
    cols = (oj + kj).reshape(n, c, -1)
    flat = rows * w + cols
    np.add.at(dx.reshape(n, c, -1),
              (np.arange(n)[:, None, None], np.arange(c)[None, :, None], flat),
              dy.reshape(n, c, -1))
    return dx


def _parity(x, axis, r):
    sl = [slice(None)] * x.ndim
    sl[axis] = slice(r, None, 2)
    return x[tuple(sl)]


def dwt_down(x, taps, axis):
    taps = np.asarray(taps, dtype=x.dtype)
    L = x.shape[axis]
    half = L // 2
    shape = list(x.shape)
    shape[axis] = half
    y = np.zeros(shape, dtype=x.dtype)
    parts = (_parity(x, axis, 0), _parity(x, axis, 1))
    for m, f in enumerate(taps):
        q, r = divmod(m, 2)
        y += f * np.roll(parts[r], -(q % half), axis=axis)
    return y


def dwt_down_pair(x, taps_a, taps_b, axis):
    return dwt_down(x, taps_a, axis), dwt_down(x, taps_b, axis)


def dwt_up(y, taps, axis, L):
    taps = np.asarray(taps, dtype=y.dtype)
    half = y.shape[axis]
    shape = list(y.shape)
    shape[axis] = L
    out = np.zeros(shape, dtype=y.dtype)
    for m, f in enumerate(taps):
        q, r = divmod(m, 2)
        _parity(out, axis, r)[...] += f * np.roll(y, q % half, axis=axis)
    return out


def dwt_up_pair(ya, yb, taps_a, taps_b, axis, L):
    return dwt_up(ya, taps_a, axis, L) + dwt_up(yb, taps_b, axis, L)
