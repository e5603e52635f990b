"""Classification / segmentation metrics, SSIM, and the depth profile.

Metric conventions (pinned for reproducibility):

* top-k ties break toward the lower class index (stable argsort).
* Segmentation scores come from the global confusion matrix; IoU,
  precision and recall are macro-averaged over classes present in the
  ground truth, and a class predicted never at all contributes 0 to the
  precision mean.
* SSIM uses the 11x11 Gaussian window (sigma 1.5), k1=0.01, k2=0.03, L=1,
  averaged over valid (unpadded) window positions.
"""

import numpy as np

from .tensor import Tensor
from .wavelet import wavedec_ll


def forward_logits(graph, images, batch_size=64):
    outs = []
    for i in range(0, images.shape[0], batch_size):
        x = Tensor(images[i:i + batch_size].astype(graph.dtype, copy=False))
        outs.append(graph.forward(x).data)
    return np.concatenate(outs, axis=0)


def topk_hits(logits, labels, k):
    order = np.argsort(-logits, axis=1, kind="stable")   # ties: lower class first
    top = order[:, :k]
    return (top == np.asarray(labels)[:, None]).any(axis=1)


def evaluate_cls(graph, dataset, batch_size=64):
    if len(dataset) == 0:
        raise ValueError("empty dataset")
    logits = forward_logits(graph, dataset.images, batch_size)
    k5 = min(5, logits.shape[1])
    return {"top1": float(topk_hits(logits, dataset.labels, 1).mean()),
            "top5": float(topk_hits(logits, dataset.labels, k5).mean())}


def confusion_matrix(pred, gt, num_classes):
    idx = gt.reshape(-1) * num_classes + pred.reshape(-1)
    return np.bincount(idx, minlength=num_classes ** 2).reshape(num_classes,
                                                                num_classes)


def seg_scores(cm):
    total = cm.sum()
    tp = np.diag(cm).astype(np.float64)
    fp = cm.sum(axis=0) - tp
    fn = cm.sum(axis=1) - tp
    present = cm.sum(axis=1) > 0
    with np.errstate(divide="ignore", invalid="ignore"):
        iou = np.where(tp + fp + fn > 0, tp / (tp + fp + fn), 0.0)
        precision = np.where(tp + fp > 0, tp / (tp + fp), 0.0)
        recall = np.where(tp + fn > 0, tp / (tp + fn), 0.0)
    return {"oa": float(tp.sum() / total),
            "miou": float(iou[present].mean()),
            "precision": float(precision[present].mean()),
            "recall": float(recall[present].mean())}


def evaluate_seg(graph, dataset, batch_size=16):
    if len(dataset) == 0:
        raise ValueError("empty dataset")
    k = dataset.num_classes
    cm = np.zeros((k, k), dtype=np.int64)
    for i in range(0, len(dataset), batch_size):
        x = Tensor(dataset.images[i:i + batch_size].astype(graph.dtype, copy=False))
        pred = graph.forward(x).data.argmax(axis=1)
        cm += confusion_matrix(pred, dataset.labels[i:i + batch_size], k)
    return seg_scores(cm)


# ---------------------------------------------------------------------------
# SSIM

def _gaussian_window(size=11, sigma=1.5):
    ax = np.arange(size) - (size - 1) / 2.0
    g = np.exp(-(ax ** 2) / (2 * sigma ** 2))
    w = np.outer(g, g)
    return w / w.sum()


_WINDOW = _gaussian_window()


def ssim(a, b, k1=0.01, k2=0.03, data_range=1.0, window=None):
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    if a.shape != b.shape:
        raise ValueError(f"ssim needs equal shapes, got {a.shape} vs {b.shape}")
    if a.ndim != 2:
        raise ValueError(f"ssim expects 2-D images, got {a.ndim}-D")
    win = _WINDOW if window is None else window
    ws = win.shape[0]
    if a.shape[0] < ws or a.shape[1] < ws:
        raise ValueError(f"image {a.shape} smaller than the {ws}x{ws} window")
    c1 = (k1 * data_range) ** 2
    c2 = (k2 * data_range) ** 2

    def windows(img):
        sh, sw = img.strides
        oh, ow = img.shape[0] - ws + 1, img.shape[1] - ws + 1
        return np.lib.stride_tricks.as_strided(
            img, (oh, ow, ws, ws), (sh, sw, sh, sw), writeable=False)

    wa, wb = windows(a), windows(b)
    flat = win.reshape(-1)
    mu_a = wa.reshape(*wa.shape[:2], -1) @ flat
    mu_b = wb.reshape(*wb.shape[:2], -1) @ flat
    ea = (wa * wa).reshape(*wa.shape[:2], -1) @ flat
    eb = (wb * wb).reshape(*wb.shape[:2], -1) @ flat
    eab = (wa * wb).reshape(*wa.shape[:2], -1) @ flat
    var_a = ea - mu_a * mu_a
    var_b = eb - mu_b * mu_b
    cov = eab - mu_a * mu_b
    num = (2 * mu_a * mu_b + c1) * (2 * cov + c2)
    den = (mu_a * mu_a + mu_b * mu_b + c1) * (var_a + var_b + c2)
    return float(np.mean(num / den))


def ssim_reference(a, b, k1=0.01, k2=0.03, data_range=1.0):
    """Direct-summation oracle; deliberately loop-based and independent."""
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    win = _gaussian_window()
    ws = 11
    c1 = (k1 * data_range) ** 2
    c2 = (k2 * data_range) ** 2
    vals = []
    for i in range(a.shape[0] - ws + 1):
        for j in range(a.shape[1] - ws + 1):
            pa = a[i:i + ws, j:j + ws]
            pb = b[i:i + ws, j:j + ws]
            mu_a = (win * pa).sum()
            mu_b = (win * pb).sum()
            var_a = (win * (pa - mu_a) ** 2).sum()
            var_b = (win * (pb - mu_b) ** 2).sum()
            cov = (win * (pa - mu_a) * (pb - mu_b)).sum()
            vals.append(((2 * mu_a * mu_b + c1) * (2 * cov + c2))
                        / ((mu_a ** 2 + mu_b ** 2 + c1) * (var_a + var_b + c2)))
    return float(np.mean(vals))


# ---------------------------------------------------------------------------
# depth profile

def _minmax(img):
    lo, hi = img.min(), img.max()
    if hi - lo < 1e-12:
        return np.zeros_like(img)
    return (img - lo) / (hi - lo)


def _upsample_to(img, size):
    rep = size // img.shape[0]
    return np.repeat(np.repeat(img, rep, axis=0), rep, axis=1)


def ssim_depth_profile(graph, images, basis="haar", batch_size=16):
    """Mean SSIM between each node's tapped feature and the input's
    low-frequency chain at the same scale.

    Protocol: grayscale by channel mean, channel-average the feature map,
    min-max normalize both, nearest-upsample both to the input extent
    (SSIM needs at least the 11x11 window), compare, average over images.
    Wrapped graphs additionally report the memory-vs-LL similarity.
    """
    n, _, size, _ = images.shape
    nodes = graph.spec.num_nodes
    refs = {}
    # channel mean and the LL chain commute (both linear), so this equals
    # wavedec_ll of the grayscale input at each level
    chain = Tensor(images.astype(graph.dtype, copy=False))
    for k in range(1, nodes + 1):
        chain = wavedec_ll(chain, basis, 1)
        refs[k] = chain.data.mean(axis=1)
    has_memory = graph.attachment is not None
    feat_accum = {k: [] for k in range(1, nodes + 1)}
    mem_accum = {k: [] for k in range(1, nodes + 1)}
    for i in range(0, n, batch_size):
        x = Tensor(images[i:i + batch_size].astype(graph.dtype, copy=False))
        _, taps = graph.forward(x, want_taps=True)
        for k in range(1, nodes + 1):
            feat = taps[f"node{k}"].data.mean(axis=1)
            for j in range(feat.shape[0]):
                a = _upsample_to(_minmax(feat[j]), size)
                r = _upsample_to(_minmax(refs[k][i + j]), size)
                feat_accum[k].append(ssim(a, r))
            mem = taps.get(f"memory{k}")
            if mem is not None:
                m = mem.data.mean(axis=1)
                for j in range(m.shape[0]):
                    a = _upsample_to(_minmax(m[j]), size)
                    r = _upsample_to(_minmax(refs[k][i + j]), size)
                    mem_accum[k].append(ssim(a, r))
    out = {"nodes": list(range(1, nodes + 1)),
           "feature_ssim": [float(np.mean(feat_accum[k])) for k in range(1, nodes + 1)]}
    if has_memory and any(mem_accum[k] for k in mem_accum):
        out["memory_ssim"] = {k: float(np.mean(v)) for k, v in mem_accum.items() if v}
    return out
