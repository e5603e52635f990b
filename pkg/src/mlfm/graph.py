"""Backbone builders, MLFM attachment, and parameter/MAC accounting.

Three architectures:

* micro_resnet: stem conv (3->16, 3x3) then five down-sampling stages
  (2x2/stride-2 conv, channel plan 16/32/64/128/256, two residual blocks
  each), global average pool, linear head.  The five stride-2 convs are the
  attachment nodes L1..L5.
* micro_fcn: the micro_resnet encoder up to L4 plus a mirrored decoder
  (nearest-neighbor upsample + 3x3 conv per stage) and a 1x1 per-pixel
  class head.
* resnet18_structural: the standard ResNet18 layer plan, built only so its
  parameters and MACs can be counted; forward is not provided.

Convolutions carry no bias; each is followed by a learned per-channel
affine (scale init 1, shift init 0), which keeps training mode-free.
MLFM attachment never touches existing parameter tensors: the memory
injection is additive and all added output-side projections start at zero,
so a freshly wrapped graph computes bitwise the same function as its
baseline.
"""

from dataclasses import dataclass, replace
from typing import Optional

import numpy as np

from . import lfmu as lfmu_mod
from ._rng import stream
from .lfmu import LfmuConfig
from .tensor import (ShapeError, Tensor, add, channel_affine, conv2d, linear,
                     mean_hw, relu, upsample_nearest2)
from .wavelet import dwt_ll

ARCHITECTURES = ("micro_resnet", "micro_fcn", "resnet18_structural")
SEG_MODES = ("none", "encoder", "encoder_decoder")
STAGE_CHANNELS = (16, 32, 64, 128, 256)
STEM_CHANNELS = 16
PLACEMENTS = tuple((s, e) for s in range(1, 6) for e in range(s, 6))


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class GraphSpec:
    architecture: str
    input_shape: tuple = (3, 64, 64)
    num_classes: int = 2

    def __post_init__(self):
        if self.architecture not in ARCHITECTURES:
            raise GraphError(f"unknown architecture {self.architecture!r}")
        if self.num_classes < 2:
            raise GraphError("num_classes must be >= 2")
        c, h, w = self.input_shape
        div = 1 << self.num_nodes
        if self.architecture != "resnet18_structural" and (h % div or w % div):
            raise GraphError(f"input {h}x{w} must be divisible by {div} "
                             f"for {self.architecture}")

    @property
    def num_nodes(self):
        return {"micro_resnet": 5, "micro_fcn": 4, "resnet18_structural": 4}[self.architecture]


@dataclass(frozen=True)
class MlfmAttachment:
    start: int = 1
    end: int = 5
    lfmu: LfmuConfig = LfmuConfig()
    seg_mode: str = "none"

    def __post_init__(self):
        if not 1 <= self.start <= self.end:
            raise GraphError(f"invalid node range L{self.start}-L{self.end}")
        if self.seg_mode not in SEG_MODES:
            raise GraphError(f"seg_mode must be one of {SEG_MODES}")

    @property
    def nodes(self):
        return tuple(range(self.start, self.end + 1))


def _kaiming(name, shape, seed, dtype):
    fan_in = int(np.prod(shape[1:]))
    bound = np.sqrt(6.0 / fan_in)
    return Tensor(stream(seed, name).uniform(-bound, bound, size=shape).astype(dtype))


class Graph:
    """Built network: immutable structure + named parameter tensors."""

    def __init__(self, spec, params, seed, dtype, attachment=None):
        self.spec = spec
        self.params = dict(params)
        self.seed = seed
        self.dtype = dtype
        self.attachment = attachment

    def replace_params(self, params):
        missing = set(self.params) ^ set(params)
        if missing:
            raise GraphError(f"parameter namespace changed: {sorted(missing)[:4]}")
        return Graph(self.spec, params, self.seed, self.dtype, self.attachment)

    def count_params(self):
        return int(sum(int(np.prod(p.data.shape)) for p in self.params.values()))

    def count_macs(self, input_shape=None):
        return count_macs_for(self.spec, self.attachment,
                              input_shape or self.spec.input_shape)

    # ------------------------------------------------------------------
    def forward(self, x, want_taps=False):
        if self.spec.architecture == "micro_resnet":
            return self._forward_micro(x, want_taps, segment=False)
        if self.spec.architecture == "micro_fcn":
            return self._forward_micro(x, want_taps, segment=True)
        raise GraphError("resnet18_structural is a counting-only graph")

    def _conv_affine_relu(self, x, name, stride=1, pad=0):
        p = self.params
        h = conv2d(x, p[f"{name}.conv.weight"], stride=stride, pad=pad)
        h = channel_affine(h, p[f"{name}.affine.gamma"], p[f"{name}.affine.beta"])
        return relu(h)

    def _block(self, x, name):
        p = self.params
        h = conv2d(x, p[f"{name}.conv1.weight"], stride=1, pad=1)
        h = channel_affine(h, p[f"{name}.affine1.gamma"], p[f"{name}.affine1.beta"])
        h = relu(h)
        h = conv2d(h, p[f"{name}.conv2.weight"], stride=1, pad=1)
        h = channel_affine(h, p[f"{name}.affine2.gamma"], p[f"{name}.affine2.beta"])
        return relu(add(x, h))

    def _forward_micro(self, x, want_taps, segment):
        att = self.attachment
        cfg = att.lfmu if att is not None else None
        taps = {}
        nodes = self.spec.num_nodes
        state = None
        image_ll = None
        details = {}

        h = self._conv_affine_relu(x, "stem", stride=1, pad=1)
        for k in range(1, nodes + 1):
            f_pre = h
            h = self._conv_affine_relu(h, f"stage{k}.down", stride=2, pad=0)
            if att is not None and cfg.supplement_enabled and k <= att.end:
                # low-frequency chain of the input, advanced to level k
                image_ll = dwt_ll(x if image_ll is None else image_ll, cfg.basis)
            if att is not None and att.start <= k <= att.end:
                if state is None:
                    state = lfmu_mod.lfmu_init(cfg, x, att.start, self.params)
                collect = att.seg_mode == "encoder_decoder"
                state, injection = lfmu_mod.lfmu_step(
                    state, f_pre, x, cfg, self.params,
                    image_ll=image_ll if cfg.supplement_enabled else None,
                    collect_details=collect)
                h = add(h, injection)
                if collect and state.details is not None:
                    details[k] = state.details
                if want_taps:
                    taps[f"memory{k}"] = state.memory
            if want_taps:
                taps[f"node{k}"] = h
            h = self._block(h, f"stage{k}.block1")
            h = self._block(h, f"stage{k}.block2")

        if not segment:
            logits = linear(mean_hw(h), self.params["head.weight"],
                            self.params["head.bias"])
        else:
            for d in range(1, nodes + 1):
                src_node = nodes + 1 - d       # decoder stage d mirrors node 5-d
                h = self._decoder_stage(h, d, details.get(src_node))
            logits = conv2d(h, self.params["seghead.weight"],
                            self.params["seghead.bias"])
        if want_taps:
            return logits, taps
        return logits

    def _decoder_stage(self, h, d, det):
        p = self.params
        up = upsample_nearest2(h)
        y = conv2d(up, p[f"dec{d}.conv.weight"], stride=1, pad=1)
        if det is not None:
            from .tensor import concat_channels
            stacked = concat_channels([det.lh, det.hl, det.hh])
            proj = conv2d(stacked, p[f"mlfm.dec{d}.proj.weight"],
                          p[f"mlfm.dec{d}.proj.bias"])
            extra = conv2d(upsample_nearest2(proj), p[f"mlfm.dec{d}.extra.weight"],
                           stride=1, pad=1)
            y = add(y, extra)      # == concat-then-conv with a partitioned weight
        y = channel_affine(y, p[f"dec{d}.affine.gamma"], p[f"dec{d}.affine.beta"])
        return relu(y)


# ---------------------------------------------------------------------------
# builders

def _affine_params(name, c, dtype):
    return {f"{name}.affine.gamma": Tensor(np.ones(c, dtype=dtype)),
            f"{name}.affine.beta": Tensor(np.zeros(c, dtype=dtype))}


def build_backbone(spec, seed=0, dtype="float32"):
    if spec.architecture == "micro_resnet":
        return _build_micro(spec, seed, dtype, segment=False)
    if spec.architecture == "micro_fcn":
        return _build_micro(spec, seed, dtype, segment=True)
    return _build_resnet18(spec, seed, dtype)


def _build_micro(spec, seed, dtype, segment):
    cin = spec.input_shape[0]
    nodes = spec.num_nodes
    chans = STAGE_CHANNELS[:nodes]
    p = {}

    def conv(name, cout, cin_, k):
        p[f"{name}.conv.weight"] = _kaiming(f"{name}.conv.weight",
                                            (cout, cin_, k, k), seed, dtype)
        p.update(_affine_params(name, cout, dtype))

    conv("stem", STEM_CHANNELS, cin, 3)
    prev = STEM_CHANNELS
    for k, c in enumerate(chans, start=1):
        conv(f"stage{k}.down", c, prev, 2)
        for b in (1, 2):
            base = f"stage{k}.block{b}"
            p[f"{base}.conv1.weight"] = _kaiming(f"{base}.conv1.weight",
                                                 (c, c, 3, 3), seed, dtype)
            p[f"{base}.affine1.gamma"] = Tensor(np.ones(c, dtype=dtype))
            p[f"{base}.affine1.beta"] = Tensor(np.zeros(c, dtype=dtype))
            p[f"{base}.conv2.weight"] = _kaiming(f"{base}.conv2.weight",
                                                 (c, c, 3, 3), seed, dtype)
            # residual branch closed at init: keeps the norm-free stack stable
            p[f"{base}.affine2.gamma"] = Tensor(np.zeros(c, dtype=dtype))
            p[f"{base}.affine2.beta"] = Tensor(np.zeros(c, dtype=dtype))
        prev = c

    # class heads start at zero: the first-step loss sits at chance level,
    # which keeps the norm-free stack inside a stable learning-rate range
    if not segment:
        p["head.weight"] = Tensor(np.zeros((prev, spec.num_classes), dtype=dtype))
        p["head.bias"] = Tensor(np.zeros(spec.num_classes, dtype=dtype))
    else:
        dec_in = prev
        for d in range(1, nodes + 1):
            cout = chans[nodes - 1 - d] if d < nodes else STEM_CHANNELS
            conv(f"dec{d}", cout, dec_in, 3)
            dec_in = cout
        p["seghead.weight"] = Tensor(np.zeros((spec.num_classes, dec_in, 1, 1),
                                              dtype=dtype))
        p["seghead.bias"] = Tensor(np.zeros(spec.num_classes, dtype=dtype))
    return Graph(spec, p, seed, dtype)


_R18_PLAN = (
    ("layer1", 64, 64, 1), ("layer2", 64, 128, 2),
    ("layer3", 128, 256, 2), ("layer4", 256, 512, 2),
)


def _build_resnet18(spec, seed, dtype):
    p = {}

    def conv(name, shape):
        p[name] = _kaiming(name, shape, seed, dtype)

    def bn(name, c):
        p[f"{name}.gamma"] = Tensor(np.ones(c, dtype=dtype))
        p[f"{name}.beta"] = Tensor(np.zeros(c, dtype=dtype))

    conv("r18.conv1.weight", (64, spec.input_shape[0], 7, 7))
    bn("r18.bn1", 64)
    for lname, cin, cout, stride in _R18_PLAN:
        for b in (1, 2):
            base = f"r18.{lname}.block{b}"
            c_in = cin if b == 1 else cout
            conv(f"{base}.conv1.weight", (cout, c_in, 3, 3))
            bn(f"{base}.bn1", cout)
            conv(f"{base}.conv2.weight", (cout, cout, 3, 3))
            bn(f"{base}.bn2", cout)
            if b == 1 and (stride != 1 or cin != cout):
                conv(f"{base}.down.weight", (cout, cin, 1, 1))
                bn(f"{base}.down.bn", cout)
    conv("r18.fc.weight", (512, spec.num_classes))
    p["r18.fc.bias"] = Tensor(np.zeros(spec.num_classes, dtype=dtype))
    return Graph(spec, p, seed, dtype)


# ---------------------------------------------------------------------------
# attachment

def attach_mlfm(graph, attachment, seed=None):
    """Wraps a built graph; existing parameter tensors are shared, all new
    output-side projections start at zero (transparency)."""
    spec = graph.spec
    if spec.architecture == "resnet18_structural":
        raise GraphError("cannot attach to the counting-only graph")
    if attachment.seg_mode != "none" and spec.architecture != "micro_fcn":
        raise GraphError(f"seg_mode={attachment.seg_mode!r} requires micro_fcn")
    if attachment.end > spec.num_nodes:
        raise GraphError(f"node L{attachment.end} does not exist in "
                         f"{spec.architecture} (nodes L1..L{spec.num_nodes})")
    seed = graph.seed if seed is None else seed
    cfg = attachment.lfmu
    cin = spec.input_shape[0]
    dtype = graph.dtype
    params = dict(graph.params)
    chans = (STEM_CHANNELS,) + STAGE_CHANNELS[:spec.num_nodes]
    for k in attachment.nodes:
        params.update(lfmu_mod.init_params(
            cfg, k, c_pre=chans[k - 1], c_post=chans[k], image_channels=cin,
            seed=seed, dtype=dtype, with_init=(k == attachment.start)))
    if attachment.seg_mode == "encoder_decoder":
        nodes = spec.num_nodes
        for k in attachment.nodes:
            d = nodes + 1 - k          # decoder stage fed by node k's details
            cout_dec = STAGE_CHANNELS[nodes - 1 - d] if d < nodes else STEM_CHANNELS
            params[f"mlfm.dec{d}.proj.weight"] = _kaiming(
                f"mlfm.dec{d}.proj.weight", (cfg.mem_channels, 3 * cfg.mem_channels, 1, 1),
                seed, dtype)
            params[f"mlfm.dec{d}.proj.bias"] = Tensor(
                np.zeros(cfg.mem_channels, dtype=dtype))
            params[f"mlfm.dec{d}.extra.weight"] = Tensor(
                np.zeros((cout_dec, cfg.mem_channels, 3, 3), dtype=dtype))
    return Graph(spec, params, seed, dtype, attachment=attachment)


def lfmu_param_count(cfg, c_pre, c_post, image_channels, with_init):
    """Closed-form parameter count of one cell (cross-checked in tests
    against the enumeration over the checkpoint namespace)."""
    cm, g = cfg.mem_channels, cfg.gate_ways
    n = cm * c_pre + cm                       # input projection
    n += (g * cm) * (g * cm) + g * cm         # gate projection
    n += c_post * cm + c_post                 # output projection
    if cfg.supplement_enabled:
        n += cm * image_channels + cm
    if with_init:
        n += cm * image_channels + cm
    return n


# ---------------------------------------------------------------------------
# MAC accounting (convolutions and linear layers only; elementwise ops,
# pooling, and the wavelet passes are excluded by the stated convention)

def _conv_macs(cin, cout, k, h_in, w_in, stride, pad):
    h_out = (h_in + 2 * pad - k) // stride + 1
    w_out = (w_in + 2 * pad - k) // stride + 1
    return cin * k * k * cout * h_out * w_out, h_out, w_out


def count_macs_for(spec, attachment, input_shape):
    c, h, w = input_shape
    arch = spec.architecture
    if arch == "resnet18_structural":
        return _r18_macs(spec, input_shape)
    nodes = spec.num_nodes
    chans = (STEM_CHANNELS,) + STAGE_CHANNELS[:nodes]
    total, h, w = _conv_macs(c, STEM_CHANNELS, 3, h, w, 1, 1)
    cm = attachment.lfmu.mem_channels if attachment is not None else 0
    g = attachment.lfmu.gate_ways if attachment is not None else 0
    for k in range(1, nodes + 1):
        m, h, w = _conv_macs(chans[k - 1], chans[k], 2, h, w, 2, 0)
        total += m
        if attachment is not None and attachment.start <= k <= attachment.end:
            if k == attachment.start:
                total += cm * c * (2 * h) * (2 * w)    # init 1x1, pre-down res
            total += cm * chans[k - 1] * h * w         # in 1x1
            if attachment.lfmu.supplement_enabled:
                total += cm * c * h * w                # sup 1x1
            total += (g * cm) * (g * cm) * h * w       # gate 1x1
            total += chans[k] * cm * h * w             # out 1x1
        for _ in (1, 2):
            total += 2 * chans[k] * chans[k] * 9 * h * w
    if arch == "micro_resnet":
        total += chans[nodes] * spec.num_classes      # linear head
        return total
    dec_in = chans[nodes]
    for d in range(1, nodes + 1):
        h, w = h * 2, w * 2
        cout = STAGE_CHANNELS[nodes - 1 - d] if d < nodes else STEM_CHANNELS
        total += dec_in * 9 * cout * h * w
        if (attachment is not None and attachment.seg_mode == "encoder_decoder"
                and attachment.start <= nodes + 1 - d <= attachment.end):
            total += cm * (3 * cm) * (h // 2) * (w // 2)   # detail projection
            total += cout * cm * 9 * h * w                 # zero-init extra conv
        dec_in = cout
    total += dec_in * spec.num_classes * h * w             # 1x1 head
    return total


def _r18_macs(spec, input_shape):
    c, h, w = input_shape
    total, h, w = _conv_macs(c, 64, 7, h, w, 2, 3)
    h, w = (h + 2 - 3) // 2 + 1, (w + 2 - 3) // 2 + 1     # 3x3/2 max pool
    for lname, cin, cout, stride in _R18_PLAN:
        for b in (1, 2):
            c_in, s = (cin, stride) if b == 1 else (cout, 1)
            m, h2, w2 = _conv_macs(c_in, cout, 3, h, w, s, 1)
            total += m
            m2, _, _ = _conv_macs(cout, cout, 3, h2, w2, 1, 1)
            total += m2
            if b == 1 and (stride != 1 or cin != cout):
                total += cin * cout * h2 * w2
            h, w = h2, w2
    total += 512 * spec.num_classes
    return total
