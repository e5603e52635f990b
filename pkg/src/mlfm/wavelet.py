"""2-D discrete wavelet analysis/synthesis over the registered basis set.

Boundary handling is periodization (circular convolution), which keeps the
half-resolution shape law exact on even extents and makes analysis followed
by synthesis an identity.  Filters longer than an axis wrap modulo its
length; the minimum supported extent is 2.

Sub-band naming: the first letter is the filter applied along the
horizontal (W) axis, the second along the vertical (H) axis, and the
vertical pass runs first.  So `hl` responds to horizontal intensity
variation and `lh` to vertical variation.
"""

from dataclasses import dataclass

import numpy as np

from . import kernels
from ._taps import TAPS
from .tensor import ShapeError, Tensor, _maybe_record

WAVELET_IDS = (
    "haar", "bior1.1", "bior1.3", "bior2.2", "bior3.3",
    "db1", "db4", "db8", "db16",
    "sym2", "sym4", "sym8", "sym20",
    "coif1", "coif2", "coif4", "coif8", "dmey",
)


class UnknownBasisError(ValueError):
    pass


@dataclass(frozen=True)
class FilterBank:
    name: str
    dec_lo: np.ndarray
    dec_hi: np.ndarray
    rec_lo: np.ndarray
    rec_hi: np.ndarray
    orthogonal: bool

    def __len__(self):
        return len(self.dec_lo)


def normalize_basis(basis):
    b = str(basis).lower()
    if b not in TAPS:
        raise UnknownBasisError(
            f"unknown wavelet basis {basis!r}; known: {', '.join(WAVELET_IDS)}")
    return b


_BANKS = {}


def filter_bank(basis):
    """Registered filter bank; verified once per process on first access."""
    b = normalize_basis(basis)
    bank = _BANKS.get(b)
    if bank is None:
        orth, dec_lo, dec_hi, rec_lo, rec_hi = TAPS[b]
        bank = FilterBank(b, *(np.asarray(f, dtype=np.float64)
                               for f in (dec_lo, dec_hi, rec_lo, rec_hi)), orth)
        _verify(bank)
        _BANKS[b] = bank
    return bank


def _verify(bank):
    if abs(bank.dec_lo.sum() - np.sqrt(2.0)) > 1e-6:
        raise AssertionError(f"{bank.name}: dec_lo DC gain is {bank.dec_lo.sum()}")
    if bank.orthogonal:
        if not (np.allclose(bank.rec_lo, bank.dec_lo[::-1])
                and np.allclose(bank.rec_hi, bank.dec_hi[::-1])):
            raise AssertionError(f"{bank.name}: orthogonal bank without reversed rec taps")
    rng = np.random.default_rng(0)
    x = rng.standard_normal(64)
    err = np.abs(_rt1d(x, bank) - x).max()
    if err > 1e-10:
        raise AssertionError(f"{bank.name}: 1-D reconstruction residual {err:.3e}")


def _rt1d(x, bank):
    x4 = np.ascontiguousarray(x, dtype=np.float64).reshape(1, 1, 1, -1)
    L = x4.shape[-1]
    lo, hi = kernels.dwt_down_pair(x4, bank.dec_lo, bank.dec_hi, 3)
    rec = kernels.dwt_up_pair(lo, hi, bank.rec_lo[::-1], bank.rec_hi[::-1], 3, L)
    return rec.reshape(-1)


# ---------------------------------------------------------------------------
# separable passes (ndarray level); vertical axis 2 first, horizontal axis 3

def _analyze(xd, bank):
    lo_v, hi_v = kernels.dwt_down_pair(xd, bank.dec_lo, bank.dec_hi, 2)
    ll, hl = kernels.dwt_down_pair(lo_v, bank.dec_lo, bank.dec_hi, 3)
    lh, hh = kernels.dwt_down_pair(hi_v, bank.dec_lo, bank.dec_hi, 3)
    return {"ll": ll, "hl": hl, "lh": lh, "hh": hh}


def _analyze_adjoint(grads, bank, h, w):
    """Exact adjoint of _analyze (scatter with the analysis taps)."""
    g = dict(grads)
    zeros = None
    for k in ("ll", "hl", "lh", "hh"):
        if g.get(k) is None:
            if zeros is None:
                ref = next(v for v in g.values() if v is not None)
                zeros = np.zeros_like(ref)
            g[k] = zeros
    d_lo_v = kernels.dwt_up_pair(g["ll"], g["hl"], bank.dec_lo, bank.dec_hi, 3, w)
    d_hi_v = kernels.dwt_up_pair(g["lh"], g["hh"], bank.dec_lo, bank.dec_hi, 3, w)
    return kernels.dwt_up_pair(d_lo_v, d_hi_v, bank.dec_lo, bank.dec_hi, 2, h)


def _synthesize(bands, bank, h, w):
    syn_lo, syn_hi = bank.rec_lo[::-1], bank.rec_hi[::-1]
    lo_v = kernels.dwt_up_pair(bands["ll"], bands["hl"], syn_lo, syn_hi, 3, w)
    hi_v = kernels.dwt_up_pair(bands["lh"], bands["hh"], syn_lo, syn_hi, 3, w)
    return kernels.dwt_up_pair(lo_v, hi_v, syn_lo, syn_hi, 2, h)


def _synthesize_adjoint(gx, bank):
    syn_lo, syn_hi = bank.rec_lo[::-1], bank.rec_hi[::-1]
    lo_v, hi_v = kernels.dwt_down_pair(gx, syn_lo, syn_hi, 2)
    ll, hl = kernels.dwt_down_pair(lo_v, syn_lo, syn_hi, 3)
    lh, hh = kernels.dwt_down_pair(hi_v, syn_lo, syn_hi, 3)
    return {"ll": ll, "hl": hl, "lh": lh, "hh": hh}


# ---------------------------------------------------------------------------
# tensor-level ops

@dataclass
class Subbands2D:
    ll: Tensor
    lh: Tensor
    hl: Tensor
    hh: Tensor

    def as_dict(self):
        return {"ll": self.ll, "lh": self.lh, "hl": self.hl, "hh": self.hh}


def _check_even(x):
    if x.data.ndim != 4:
        raise ShapeError(f"expected NCHW tensor, got shape {x.shape}")
    _, _, h, w = x.shape
    if h % 2 or w % 2 or h < 2 or w < 2:
        raise ShapeError(f"wavelet pass needs even extents >= 2, got {h}x{w}")


def dwt2(x, basis):
    """One separable analysis level; returns four half-resolution sub-bands."""
    bank = filter_bank(basis)
    _check_even(x)
    _, _, h, w = x.shape
    bands = _analyze(x.data, bank)
    outs = {k: Tensor(v) for k, v in bands.items()}
    order = ("ll", "lh", "hl", "hh")

    def bwd(gs):
        grads = dict(zip(order, gs))
        return (_analyze_adjoint(grads, bank, h, w),)

    _maybe_record([outs[k] for k in order], [x], bwd)
    return Subbands2D(**outs)


def idwt2(s, basis):
    """Exact inverse of dwt2 under periodization."""
    bank = filter_bank(basis)
    shapes = {k: t.shape for k, t in s.as_dict().items()}
    if len(set(shapes.values())) != 1:
        raise ShapeError(f"sub-band shapes differ: {shapes}")
    n, c, hh, wh = s.ll.shape
    h, w = hh * 2, wh * 2
    bands = {k: t.data for k, t in s.as_dict().items()}
    out = Tensor(_synthesize(bands, bank, h, w))
    order = ("ll", "lh", "hl", "hh")

    def bwd(g):
        gb = _synthesize_adjoint(g[0], bank)
        return tuple(gb[k] for k in order)

    _maybe_record([out], [s.ll, s.lh, s.hl, s.hh], bwd)
    return out


def dwt_ll(x, basis):
    """Low-pass branch only (identical values to dwt2(x).ll, without the
    detail-band work); the gate hot path."""
    bank = filter_bank(basis)
    _check_even(x)
    _, _, h, w = x.shape
    ll = kernels.dwt_down(kernels.dwt_down(x.data, bank.dec_lo, 2),
                          bank.dec_lo, 3)
    out = Tensor(ll)

    def bwd(g):
        gv = kernels.dwt_up(g[0], bank.dec_lo, 3, w)
        return (kernels.dwt_up(gv, bank.dec_lo, 2, h),)

    _maybe_record([out], [x], bwd)
    return out


def wavedec_ll(x, basis, levels):
    """Iterated low-frequency chain: levels applications of dwt2, keeping ll."""
    if levels < 1:
        raise ValueError(f"levels must be >= 1, got {levels}")
    _, _, h, w = x.shape
    if h % (1 << levels) or w % (1 << levels):
        raise ShapeError(
            f"extents {h}x{w} not divisible by 2^{levels} for the requested depth")
    out = x
    for _ in range(levels):
        out = dwt_ll(out, basis)
    return out


# ---------------------------------------------------------------------------
# self test

def selftest(seed=0):
    """Per-basis PR / DC-gain / energy report over all registered bases."""
    rng = np.random.default_rng(seed)
    rows = []
    for name in WAVELET_IDS:
        bank = filter_bank(name)
        x = rng.standard_normal(64)
        pr = float(np.abs(_rt1d(x, bank) - x).max())
        dc = float(abs(bank.dec_lo.sum() - np.sqrt(2.0)))
        if bank.orthogonal:
            img = Tensor(rng.standard_normal((1, 1, 16, 16)))
            s = dwt2(img, name)
            e_in = float((img.data ** 2).sum())
            e_out = float(sum((t.data ** 2).sum() for t in s.as_dict().values()))
            energy = abs(e_out - e_in) / e_in
        else:
            energy = None
        ok = pr < 1e-8 and dc < 1e-6 and (energy is None or energy < 1e-5)
        rows.append({"basis": name, "taps": len(bank), "orthogonal": bank.orthogonal,
                     "pr_error": pr, "dc_error": dc, "energy_error": energy,
                     "status": "PASS" if ok else "FAIL"})
    return rows


def format_selftest(rows):
    lines = [f"{'basis':9s} {'taps':>4s} {'orth':>5s} {'pr_error':>10s} "
             f"{'dc_error':>10s} {'energy':>10s} status"]
    for r in rows:
        energy = "-" if r["energy_error"] is None else f"{r['energy_error']:.2e}"
        lines.append(f"{r['basis']:9s} {r['taps']:4d} {str(r['orthogonal']):>5s} "
                     f"{r['pr_error']:10.2e} {r['dc_error']:10.2e} {energy:>10s} "
                     f"{r['status']}")
    return "\n".join(lines)
