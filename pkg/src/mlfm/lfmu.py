"""Low-frequency memory unit: a gated cell recurrent over scale.

The cell carries a memory tensor at the backbone's current resolution and
is stepped once at every down-sampling node.  Gate layout (all projections
are 1x1 convolutions; `ds` is the configured down-sampler):

    forget     M~ = ds(M)                              half resolution
    input      I  = W_in  ds(f_pre)
    supplement S  = W_sup LL_k(image)                  optional
    update     (u_f, u_i[, u_s]) = sigmoid(W_gate [M~; I(; S)])
               M' = u_f * M~ + u_i * tanh(I) (+ u_s * tanh(S))
    output     injection = W_out M'                    added to the backbone

W_out starts at zero, so a freshly attached cell is an exact no-op on the
wrapped network (zero-init transparency).  The memory is reset per forward
pass; recurrence is across scale, not across batches.
"""

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from ._rng import stream
from .tensor import (ShapeError, Tensor, add, concat_channels, conv2d, mul,
                     pool2d, sigmoid, split_channels, tanh)
from .wavelet import Subbands2D, dwt2, dwt_ll, normalize_basis, wavedec_ll

DOWNSAMPLERS = ("wavelet", "max", "avg")


@dataclass(frozen=True)
class LfmuConfig:
    mem_channels: int = 32
    basis: str = "haar"
    downsampler: str = "wavelet"
    supplement_enabled: bool = True

    def __post_init__(self):
        if self.mem_channels < 1:
            raise ValueError(f"mem_channels must be >= 1, got {self.mem_channels}")
        if self.downsampler not in DOWNSAMPLERS:
            raise ValueError(f"downsampler must be one of {DOWNSAMPLERS}, "
                             f"got {self.downsampler!r}")
        normalize_basis(self.basis)

    @property
    def gate_ways(self):
        return 3 if self.supplement_enabled else 2


@dataclass
class LfmuState:
    memory: Tensor
    node: int
    details: Optional[Subbands2D] = field(default=None, repr=False)


def gate_downsample(x, mode, basis=None):
    """Half-resolution gate input: wavelet LL or a 2x2 pooling."""
    if mode == "wavelet":
        return dwt_ll(x, basis)
    if mode in ("max", "avg"):
        return pool2d(x, mode, 2, 2)
    raise ValueError(f"downsampler must be one of {DOWNSAMPLERS}, got {mode!r}")


def param_names(cfg, node, with_init):
    names = [f"lfmu.node{node}.in.weight", f"lfmu.node{node}.in.bias",
             f"lfmu.node{node}.gate.weight", f"lfmu.node{node}.gate.bias",
             f"lfmu.node{node}.out.weight", f"lfmu.node{node}.out.bias"]
    if cfg.supplement_enabled:
        names += [f"lfmu.node{node}.sup.weight", f"lfmu.node{node}.sup.bias"]
    if with_init:
        names += [f"lfmu.node{node}.init.weight", f"lfmu.node{node}.init.bias"]
    return names


def init_params(cfg, node, c_pre, c_post, image_channels, seed, dtype,
                with_init=False):
    """Per-node parameter tensors under the checkpoint naming convention.

    Output projections are zero-initialized (transparency); the rest are
    Kaiming-uniform with a per-name Philox stream, so values do not depend
    on creation order.
    """
    cm = cfg.mem_channels
    g = cfg.gate_ways

    def kaiming(name, shape):
        fan_in = int(np.prod(shape[1:]))
        bound = np.sqrt(6.0 / fan_in)
        rng = stream(seed, name)
        return Tensor(rng.uniform(-bound, bound, size=shape).astype(dtype))

    def zeros(shape):
        return Tensor(np.zeros(shape, dtype=dtype))

    p = {}
    pre = f"lfmu.node{node}"
    p[f"{pre}.in.weight"] = kaiming(f"{pre}.in.weight", (cm, c_pre, 1, 1))
    p[f"{pre}.in.bias"] = zeros((cm,))
    if cfg.supplement_enabled:
        p[f"{pre}.sup.weight"] = kaiming(f"{pre}.sup.weight", (cm, image_channels, 1, 1))
        p[f"{pre}.sup.bias"] = zeros((cm,))
    p[f"{pre}.gate.weight"] = kaiming(f"{pre}.gate.weight", (g * cm, g * cm, 1, 1))
    p[f"{pre}.gate.bias"] = zeros((g * cm,))
    p[f"{pre}.out.weight"] = zeros((c_post, cm, 1, 1))
    p[f"{pre}.out.bias"] = zeros((c_post,))
    if with_init:
        p[f"{pre}.init.weight"] = kaiming(f"{pre}.init.weight", (cm, image_channels, 1, 1))
        p[f"{pre}.init.bias"] = zeros((cm,))
    return p


def _proj(params, prefix, x):
    return conv2d(x, params[f"{prefix}.weight"], params[f"{prefix}.bias"])


def lfmu_init(cfg, image, start_node, params, prefix="lfmu"):
    """Initial memory from the image's low-frequency chain at the
    resolution entering `start_node` (levels = start_node - 1)."""
    if start_node < 1:
        raise ValueError(f"start_node must be >= 1, got {start_node}")
    _, _, h, w = image.shape
    if h % (1 << start_node) or w % (1 << start_node):
        raise ShapeError(f"image extents {h}x{w} not divisible by 2^{start_node}")
    levels = start_node - 1
    ll = image if levels == 0 else wavedec_ll(image, cfg.basis, levels)
    memory = _proj(params, f"{prefix}.node{start_node}.init", ll)
    return LfmuState(memory=memory, node=start_node - 1)


def lfmu_step(state, f_pre, image, cfg, params, prefix="lfmu",
              image_ll=None, collect_details=False):
    """One gate pass at node k = state.node + 1.

    `f_pre` is the backbone feature just before node k's down-sampling.
    `image_ll`, when given, must equal wavedec_ll(image, cfg.basis, k);
    callers that walk the scale chain pass it to avoid recomputing the
    pyramid from the top.
    """
    k = state.node + 1
    mem = state.memory
    if mem.shape[0] != f_pre.shape[0] or mem.shape[2:] != f_pre.shape[2:]:
        raise ShapeError(f"memory {mem.shape} and feature {f_pre.shape} disagree "
                         f"at node {k}")
    if mem.shape[2] % 2 or mem.shape[3] % 2:
        raise ShapeError(f"node {k}: odd extents {mem.shape[2:]} cannot halve")

    pre = f"{prefix}.node{k}"
    forgotten = gate_downsample(mem, cfg.downsampler, cfg.basis)
    gate_in = _proj(params, f"{pre}.in",
                    gate_downsample(f_pre, cfg.downsampler, cfg.basis))

    parts = [forgotten, gate_in]
    if cfg.supplement_enabled:
        if image_ll is None:
            _, _, ih, iw = image.shape
            if ih % (1 << k) or iw % (1 << k):
                raise ShapeError(f"image extents {ih}x{iw} not divisible by 2^{k} "
                                 f"for the supplement gate at node {k}")
            image_ll = wavedec_ll(image, cfg.basis, k)
        if image_ll.shape[2:] != forgotten.shape[2:]:
            raise ShapeError(f"supplement level {k} resolution {image_ll.shape[2:]} "
                             f"does not match memory {forgotten.shape[2:]}")
        supplement = _proj(params, f"{pre}.sup", image_ll)
        parts.append(supplement)

    cm = cfg.mem_channels
    gates = sigmoid(_proj(params, f"{pre}.gate", concat_channels(parts)))
    if cfg.supplement_enabled:
        u_f, u_i, u_s = split_channels(gates, [cm, cm, cm])
        memory = add(add(mul(u_f, forgotten), mul(u_i, tanh(gate_in))),
                     mul(u_s, tanh(supplement)))
    else:
        u_f, u_i = split_channels(gates, [cm, cm])
        memory = add(mul(u_f, forgotten), mul(u_i, tanh(gate_in)))

    injection = _proj(params, f"{pre}.out", memory)

    details = None
    if collect_details:
        s = dwt2(mem, cfg.basis)   # the forget transform's discarded sub-bands
        details = s
    return LfmuState(memory=memory, node=k, details=details), injection
