"""Dense tensors with tape-based reverse-mode differentiation.

Tensors are immutable value wrappers around contiguous numpy arrays
(float32 or float64).  Differentiable operations executed while a Tape is
active are recorded on it; `backward(loss, tape)` replays the records in
reverse and accumulates gradients keyed by grad_id.  Only tensors that are
watched by the tape (parameters) or derived from watched tensors carry a
grad_id; everything else is a constant.

A Tape is confined to one thread and one training step; forward passes are
pure functions of their inputs.
"""

import threading

import numpy as np

from . import kernels

DTYPES = ("float32", "float64")


class ShapeError(ValueError):
    """Shape or dtype mismatch between operands."""


class TapeError(RuntimeError):
    """Backward called with an unusable loss/tape combination."""


_id_lock = threading.Lock()
_next_id = [1]


def _new_id():
    with _id_lock:
        i = _next_id[0]
        _next_id[0] += 1
        return i


class Tensor:
    __slots__ = ("data", "grad_id")

    def __init__(self, data, dtype=None):
        arr = np.asarray(data, dtype=dtype)
        if arr.dtype not in (np.float32, np.float64):
            arr = arr.astype(np.float64 if arr.dtype == np.int64 else np.float32)
        self.data = np.ascontiguousarray(arr)
        self.grad_id = None

    @property
    def shape(self):
        return self.data.shape

    @property
    def dtype(self):
        return str(self.data.dtype)

    def item(self):
        return float(self.data.reshape(-1)[0])

    def __repr__(self):
        return f"Tensor(shape={self.data.shape}, dtype={self.data.dtype})"


_local = threading.local()


def _active_tape():
    return getattr(_local, "tape", None)


class Tape:
    """Ordered record of differentiable operations plus gradient storage."""

    def __init__(self):
        self._records = []          # (out_ids, in_ids, backward_fn)
        self._known = set()         # grad_ids produced or watched under this tape

    def __enter__(self):
        if _active_tape() is not None:
            raise TapeError("a Tape is already active on this thread")
        _local.tape = self
        return self

    def __exit__(self, *exc):
        _local.tape = None
        return False

    def watch(self, t):
        if t.grad_id is None:
            t.grad_id = _new_id()
        self._known.add(t.grad_id)
        return t

    def knows(self, t):
        return t is not None and t.grad_id is not None and t.grad_id in self._known

    def _track_out(self, out):
        out.grad_id = _new_id()
        self._known.add(out.grad_id)

    def record(self, outs, ins, backward_fn):
        for o in outs:
            self._track_out(o)
        self._records.append(
            (tuple(o.grad_id for o in outs),
             tuple(t.grad_id if t is not None else None for t in ins),
             backward_fn))


def _same_dtype(*tensors):
    dt = tensors[0].data.dtype
    for t in tensors[1:]:
        if t is not None and t.data.dtype != dt:
            raise ShapeError(f"mixed dtypes in one op: {dt} vs {t.data.dtype}")
    return dt


def _maybe_record(outs, ins, backward_fn):
    tape = _active_tape()
    if tape is not None and any(tape.knows(t) for t in ins if t is not None):
        tape.record(outs, ins, backward_fn)


# ---------------------------------------------------------------------------
# elementwise

def add(x, y):
    if x.shape != y.shape:
        raise ShapeError(f"add operands differ: {x.shape} vs {y.shape}")
    _same_dtype(x, y)
    out = Tensor(x.data + y.data)
    _maybe_record([out], [x, y], lambda g: (g[0], g[0]))
    return out


def mul(x, y):
    if x.shape != y.shape:
        raise ShapeError(f"mul operands differ: {x.shape} vs {y.shape}")
    _same_dtype(x, y)
    out = Tensor(x.data * y.data)
    xd, yd = x.data, y.data
    _maybe_record([out], [x, y], lambda g: (g[0] * yd, g[0] * xd))
    return out


def binary(x, y, op):
    if op == "add":
        return add(x, y)
    if op == "mul":
        return mul(x, y)
    raise ValueError(f"unknown binary op {op!r}")


def relu(x):
    out = Tensor(np.maximum(x.data, 0))
    mask = x.data > 0          # subgradient 0 at the kink
    _maybe_record([out], [x], lambda g: (g[0] * mask,))
    return out


def sigmoid(x):
    y = 1.0 / (1.0 + np.exp(-x.data))
    out = Tensor(y)
    _maybe_record([out], [x], lambda g: (g[0] * y * (1.0 - y),))
    return out


def tanh(x):
    y = np.tanh(x.data)
    out = Tensor(y)
    _maybe_record([out], [x], lambda g: (g[0] * (1.0 - y * y),))
    return out


_POINTWISE = {"relu": relu, "sigmoid": sigmoid, "tanh": tanh}


def pointwise(x, f):
    try:
        return _POINTWISE[f](x)
    except KeyError:
        raise ValueError(f"unknown pointwise function {f!r}") from None


def scale(x, s):
    out = Tensor(x.data * s)
    _maybe_record([out], [x], lambda g: (g[0] * s,))
    return out


# ---------------------------------------------------------------------------
# convolution / pooling / structure

def conv2d(x, w, b=None, stride=1, pad=0):
    if x.data.ndim != 4 or w.data.ndim != 4:
        raise ShapeError("conv2d expects NCHW input and OIHW weight")
    n, cin, h, wd = x.shape
    cout, win, kh, kw = w.shape
    if win != cin:
        raise ShapeError(f"conv2d channel mismatch: input C={cin}, weight Cin={win}")
    if b is not None and b.shape != (cout,):
        raise ShapeError(f"conv2d bias shape {b.shape}, expected ({cout},)")
    if (h + 2 * pad - kh) % stride or (wd + 2 * pad - kw) % stride \
            or h + 2 * pad < kh or wd + 2 * pad < kw:
        raise ShapeError(
            f"conv2d geometry invalid: H={h} W={wd} pad={pad} K={kh}x{kw} stride={stride}")
    _same_dtype(x, w, b)
    y = kernels.conv2d_forward(x.data, w.data, stride, pad)
    if b is not None:
        y = y + b.data[None, :, None, None]
    out = Tensor(y)
    x_shape, w_shape = x.data.shape, w.data.shape
    xd, wd_ = x.data, w.data

    def bwd(g):
        gy = g[0]
        gx = kernels.conv2d_backward_x(gy, wd_, x_shape, stride, pad)
        gw = kernels.conv2d_backward_w(gy, xd, w_shape, stride, pad)
        if b is None:
            return gx, gw
        return gx, gw, gy.sum(axis=(0, 2, 3))

    _maybe_record([out], [x, w] if b is None else [x, w, b], bwd)
    return out


def pool2d(x, kind, k=2, s=2):
    if kind not in ("max", "avg"):
        raise ValueError(f"pool kind must be max|avg, got {kind!r}")
    n, c, h, w = x.shape
    if (h - k) % s or (w - k) % s or h < k or w < k:
        raise ShapeError(f"pool2d extents H={h} W={w} not compatible with k={k} s={s}")
    y, arg = kernels.pool2d_forward(x.data, kind, k, s)
    out = Tensor(y)
    x_shape = x.data.shape
    _maybe_record([out], [x],
                  lambda g: (kernels.pool2d_backward(g[0], arg, x_shape, kind, k, s),))
    return out


def mean_hw(x):
    """Global average over the spatial axes: NCHW -> NC."""
    n, c, h, w = x.shape
    out = Tensor(x.data.mean(axis=(2, 3)))
    inv = 1.0 / (h * w)
    _maybe_record([out], [x],
                  lambda g: (np.broadcast_to((g[0] * inv)[:, :, None, None],
                                             (n, c, h, w)).copy(),))
    return out


def linear(x, w, b=None):
    if x.data.ndim != 2 or w.data.ndim != 2 or x.shape[1] != w.shape[0]:
        raise ShapeError(f"linear shapes: x{x.shape} @ w{w.shape}")
    _same_dtype(x, w, b)
    y = x.data @ w.data
    if b is not None:
        y = y + b.data[None, :]
    out = Tensor(y)
    xd, wd = x.data, w.data

    def bwd(g):
        gy = g[0]
        if b is None:
            return gy @ wd.T, xd.T @ gy
        return gy @ wd.T, xd.T @ gy, gy.sum(axis=0)

    _maybe_record([out], [x, w] if b is None else [x, w, b], bwd)
    return out


def channel_affine(x, gamma, beta):
    """Per-channel learned scale and shift (norm-free affine)."""
    c = x.shape[1]
    if gamma.shape != (c,) or beta.shape != (c,):
        raise ShapeError(f"affine params must have shape ({c},)")
    _same_dtype(x, gamma, beta)
    out = Tensor(x.data * gamma.data[None, :, None, None]
                 + beta.data[None, :, None, None])
    xd, gd = x.data, gamma.data

    def bwd(g):
        gy = g[0]
        return (gy * gd[None, :, None, None],
                (gy * xd).sum(axis=(0, 2, 3)),
                gy.sum(axis=(0, 2, 3)))

    _maybe_record([out], [x, gamma, beta], bwd)
    return out


def concat_channels(tensors):
    _same_dtype(*tensors)
    sizes = [t.shape[1] for t in tensors]
    out = Tensor(np.concatenate([t.data for t in tensors], axis=1))
    bounds = np.cumsum([0] + sizes)

    def bwd(g):
        gy = g[0]
        return tuple(gy[:, bounds[i]:bounds[i + 1]] for i in range(len(sizes)))

    _maybe_record([out], list(tensors), bwd)
    return out


def split_channels(x, sizes):
    if sum(sizes) != x.shape[1]:
        raise ShapeError(f"split sizes {sizes} do not cover C={x.shape[1]}")
    bounds = np.cumsum([0] + list(sizes))
    outs = [Tensor(np.ascontiguousarray(x.data[:, bounds[i]:bounds[i + 1]]))
            for i in range(len(sizes))]

    def bwd(gs):
        parts = [gs[i] if gs[i] is not None
                 else np.zeros(outs[i].data.shape, dtype=x.data.dtype)
                 for i in range(len(sizes))]
        return (np.concatenate(parts, axis=1),)

    _maybe_record(outs, [x], bwd)
    return outs


def upsample_nearest2(x):
    n, c, h, w = x.shape
    out = Tensor(np.repeat(np.repeat(x.data, 2, axis=2), 2, axis=3))

    def bwd(g):
        gy = g[0]
        return (gy.reshape(n, c, h, 2, w, 2).sum(axis=(3, 5)),)

    _maybe_record([out], [x], bwd)
    return out


def sum_all(x):
    out = Tensor(np.asarray(x.data.sum(), dtype=x.data.dtype))
    shape = x.data.shape
    _maybe_record([out], [x],
                  lambda g: (np.full(shape, g[0], dtype=x.data.dtype),))
    return out


# ---------------------------------------------------------------------------
# loss

def softmax_cross_entropy(logits, labels):
    """Mean NLL over the batch (and spatial positions for NKHW logits)."""
    ld = logits.data
    if ld.ndim == 4:
        n, k, h, w = ld.shape
        flat = np.ascontiguousarray(ld.transpose(0, 2, 3, 1)).reshape(-1, k)
    elif ld.ndim == 2:
        flat = ld
        k = ld.shape[1]
    else:
        raise ShapeError(f"logits must be NK or NKHW, got {logits.shape}")
    lab = np.asarray(labels).reshape(-1)
    if lab.shape[0] != flat.shape[0]:
        raise ShapeError(f"{lab.shape[0]} labels for {flat.shape[0]} rows of logits")
    if lab.min() < 0 or lab.max() >= k:
        raise ValueError(f"label out of range [0, {k}): {int(lab.min())}..{int(lab.max())}")
    m = flat.max(axis=1, keepdims=True)
    z = flat - m
    lse = np.log(np.exp(z).sum(axis=1, keepdims=True))
    rows = np.arange(flat.shape[0])
    nll = (lse[:, 0] - z[rows, lab]).mean()
    out = Tensor(np.asarray(nll, dtype=ld.dtype))

    def bwd(g):
        p = np.exp(z - lse)
        p[rows, lab] -= 1.0
        p *= g[0] / flat.shape[0]
        if ld.ndim == 4:
            p = p.reshape(ld.shape[0], ld.shape[2], ld.shape[3], k).transpose(0, 3, 1, 2)
        return (np.ascontiguousarray(p),)

    _maybe_record([out], [logits], bwd)
    return out


# ---------------------------------------------------------------------------
# backward / optimizer

def backward(loss, tape):
    """Replays the tape in reverse; returns {grad_id: ndarray}."""
    if loss.data.size != 1:
        raise TapeError(f"loss must be scalar, got shape {loss.shape}")
    if loss.grad_id is None or loss.grad_id not in tape._known:
        raise TapeError("loss was not produced under this tape")
    grads = {loss.grad_id: np.ones_like(loss.data)}
    for out_ids, in_ids, fn in reversed(tape._records):
        gouts = [grads.get(i) for i in out_ids]
        if all(g is None for g in gouts):
            continue
        if any(g is None for g in gouts):
            gouts = [g if g is not None else None for g in gouts]
        gins = fn(gouts)
        for gid, g in zip(in_ids, gins):
            if gid is None or g is None:
                continue
            if gid in grads:
                grads[gid] = grads[gid] + g
            else:
                grads[gid] = g
    return grads


def sgd_step(params, grads, lr, momentum=0.0, weight_decay=0.0, velocity=None):
    """v <- momentum*v + (g + wd*p); p <- p - lr*v.  Functional update."""
    if lr <= 0:
        raise ValueError(f"lr must be positive, got {lr}")
    if not 0.0 <= momentum < 1.0:
        raise ValueError(f"momentum must be in [0, 1), got {momentum}")
    if velocity is None:
        velocity = {}
    new_params, new_velocity = {}, {}
    for name, p in params.items():
        g = grads.get(name)
        if g is None:
            new_params[name] = p
            if name in velocity:
                new_velocity[name] = velocity[name]
            continue
        g = g.data if isinstance(g, Tensor) else g
        if g.shape != p.data.shape:
            raise ShapeError(f"grad shape {g.shape} != param shape {p.data.shape} for {name!r}")
        upd = g + weight_decay * p.data if weight_decay else g
        v = velocity.get(name)
        if v is not None and v.shape != p.data.shape:
            raise ShapeError(f"velocity shape {v.shape} != param shape for {name!r}")
        v = momentum * v + upd if (momentum and v is not None) else \
            (momentum * np.zeros_like(upd) + upd if momentum else upd)
        new_params[name] = Tensor(p.data - lr * v)
        new_velocity[name] = v
    return new_params, new_velocity
