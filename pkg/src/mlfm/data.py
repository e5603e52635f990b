"""Synthetic datasets, disk cache, and a bare-bones image-directory loader.

Both generators are bit-stable: every random draw comes from Philox streams
keyed by (seed, documented stream name), so (generator, seed, n, size)
fully determines the emitted bytes.
"""

import re
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from ._rng import stream


@dataclass
class Dataset:
    images: np.ndarray          # N x 3 x H x W, float32 in [0, 1]
    labels: np.ndarray          # (N,) int64 or (N, H, W) int64
    generator: str
    seed: int
    num_classes: int

    def __len__(self):
        return self.images.shape[0]

    @property
    def is_segmentation(self):
        return self.labels.ndim == 3

    def subset(self, idx):
        return Dataset(self.images[idx], self.labels[idx],
                       self.generator, self.seed, self.num_classes)


def _check_size(size):
    if size < 32 or (size & (size - 1)):
        raise ValueError(f"size must be a power of two >= 32, got {size}")


def gen_synth_lowfreq(n, size, seed):
    """Two-class orientation task solvable from low frequencies alone.

    Image formula (pixel (y, x), channel c):
        s(y, x)   = sin(2*pi*(rho*cos(theta)*x/size + rho*sin(theta)*y/size + phi))
        img       = (s + noise_c + 2) / 4
    with rho ~ U(0.5, 2) cycles, phi = 1/4 fixed (an even cosine grating,
    which keeps the class linearly decodable from the low-frequency chain),
    noise ~ U(-1, 1) iid per pixel and channel (same amplitude as the
    sinusoid).  Class alternates with the sample index; the gradient
    direction theta is drawn from [-25, 25] degrees for class 0
    (near-horizontal) and [65, 115] for class 1 (near-vertical).
    """
    _check_size(size)
    ps = stream(seed, "lowfreq.params")
    ns = stream(seed, "lowfreq.noise")
    labels = np.arange(n, dtype=np.int64) % 2
    u = ps.uniform(0.0, 1.0, size=n)
    theta = np.where(labels == 0, -25.0 + 50.0 * u, 65.0 + 50.0 * u) * np.pi / 180.0
    rho = ps.uniform(0.5, 2.0, size=n)
    phi = 0.25
    ax = np.arange(size) / size
    gx = rho[:, None, None] * np.cos(theta)[:, None, None] * ax[None, None, :]
    gy = rho[:, None, None] * np.sin(theta)[:, None, None] * ax[None, :, None]
    s = np.sin(2 * np.pi * (gx + gy + phi))
    noise = ns.uniform(-1.0, 1.0, size=(n, 3, size, size))
    images = ((s[:, None, :, :] + noise + 2.0) / 4.0).astype(np.float32)
    return Dataset(images, labels, "lowfreq", seed, num_classes=2)


def gen_synth_shapes(n, size, seed):
    """Three-class segmentation: background / rectangle / disk.

    1..3 non-occluding shapes per image (rejection placement on bounding
    circles, up to 40 tries, shape dropped if it cannot fit).  Intensity
    bands separate the classes: background ramp in [0.05, 0.30], rectangle
    linear-gradient fill in [0.45, 0.70], disk radial-gradient fill in
    [0.75, 1.00], plus U(-0.02, 0.02) noise, clipped to [0, 1].  Labels
    come from the analytic masks.
    """
    _check_size(size)
    ps = stream(seed, "shapes.params")
    ns = stream(seed, "shapes.noise")
    yy, xx = np.mgrid[0:size, 0:size]
    images = np.zeros((n, 3, size, size), dtype=np.float32)
    labels = np.zeros((n, size, size), dtype=np.int64)
    for i in range(n):
        c0, c1, c2 = ps.uniform(0.0, 1.0, size=3)
        ramp = c0 + c1 * xx / size + c2 * yy / size
        ramp = 0.05 + 0.25 * (ramp - ramp.min()) / max(ramp.max() - ramp.min(), 1e-9)
        img = ramp.astype(np.float64)
        lab = np.zeros((size, size), dtype=np.int64)
        placed = []          # (cy, cx, bound_radius)
        count = int(ps.integers(1, 4))
        for _ in range(count):
            for _attempt in range(40):
                is_disk = bool(ps.integers(0, 2))
                if is_disk:
                    r = ps.uniform(0.08, 0.20) * size
                    bound = r
                else:
                    a = ps.uniform(0.08, 0.20) * size
                    b = ps.uniform(0.08, 0.20) * size
                    bound = np.hypot(a, b)
                margin = bound + 1
                if margin * 2 >= size:
                    continue
                cy = ps.uniform(margin, size - margin)
                cx = ps.uniform(margin, size - margin)
                if any(np.hypot(cy - py, cx - px) <= bound + pb + 1
                       for py, px, pb in placed):
                    continue
                if is_disk:
                    mask = (yy - cy) ** 2 + (xx - cx) ** 2 <= r * r
                    rad = np.sqrt((yy - cy) ** 2 + (xx - cx) ** 2) / max(r, 1e-9)
                    fill = 1.00 - 0.25 * np.clip(rad, 0.0, 1.0)
                    cls = 2
                else:
                    mask = (np.abs(yy - cy) <= b) & (np.abs(xx - cx) <= a)
                    ang = ps.uniform(0.0, 2 * np.pi)
                    t = ((xx - cx) * np.cos(ang) + (yy - cy) * np.sin(ang)) / max(bound, 1e-9)
                    fill = 0.575 + 0.125 * np.clip(t, -1.0, 1.0)
                    cls = 1
                img = np.where(mask, fill, img)
                lab = np.where(mask, cls, lab)
                placed.append((cy, cx, bound))
                break
        noise = ns.uniform(-0.02, 0.02, size=(3, size, size))
        images[i] = np.clip(img[None, :, :] + noise, 0.0, 1.0).astype(np.float32)
        labels[i] = lab
    return Dataset(images, labels, "shapes", seed, num_classes=3)


GENERATORS = {"lowfreq": gen_synth_lowfreq, "shapes": gen_synth_shapes}


def cache_name(generator, seed, n, size):
    return f"synth_{generator}_{seed}_{n}_{size}.npz"


def load_or_generate(generator, n, size, seed, cache_dir=None):
    if generator not in GENERATORS:
        raise ValueError(f"unknown generator {generator!r}; known: {sorted(GENERATORS)}")
    path = None
    if cache_dir is not None:
        path = Path(cache_dir) / cache_name(generator, seed, n, size)
        if path.exists():
            with np.load(path) as z:
                return Dataset(z["images"], z["labels"], generator, seed,
                               int(z["num_classes"]))
    ds = GENERATORS[generator](n, size, seed)
    if path is not None:
        path.parent.mkdir(parents=True, exist_ok=True)
        np.savez(path, images=ds.images, labels=ds.labels,
                 num_classes=np.int64(ds.num_classes))
    return ds


# ---------------------------------------------------------------------------
# uncompressed PPM (P6) / PGM (P5) directory loader: root/<class_name>/*.ppm

_MAGICS = {b"P6": 3, b"P5": 1}


def _read_pnm(path):
    data = Path(path).read_bytes()
    tokens = []
    pos = 0
    while len(tokens) < 4:
        m = re.match(rb"(?:\s|#[^\n]*\n)*(\S+)", data[pos:])
        if m is None:
            raise ValueError(f"{path}: truncated header")
        tokens.append(m.group(1))
        pos += m.end()
    magic, w, h, maxval = tokens[0], int(tokens[1]), int(tokens[2]), int(tokens[3])
    if magic not in _MAGICS:
        raise ValueError(f"{path}: unsupported magic {magic!r} (binary P5/P6 only)")
    if maxval != 255:
        raise ValueError(f"{path}: only maxval 255 supported, got {maxval}")
    channels = _MAGICS[magic]
    raw = data[pos + 1: pos + 1 + w * h * channels]
    if len(raw) != w * h * channels:
        raise ValueError(f"{path}: expected {w * h * channels} pixel bytes")
    arr = np.frombuffer(raw, dtype=np.uint8).reshape(h, w, channels)
    if channels == 1:
        arr = np.repeat(arr, 3, axis=2)
    return arr.transpose(2, 0, 1).astype(np.float32) / 255.0


def load_image_dir(root):
    """`root/<class_name>/*.ppm|pgm` -> classification Dataset; class ids
    follow the sorted class directory names; all images must share extents."""
    root = Path(root)
    class_dirs = sorted(d for d in root.iterdir() if d.is_dir())
    if not class_dirs:
        raise ValueError(f"{root}: no class subdirectories")
    images, labels = [], []
    for ci, d in enumerate(class_dirs):
        files = sorted(p for p in d.iterdir() if p.suffix.lower() in (".ppm", ".pgm"))
        for f in files:
            images.append(_read_pnm(f))
            labels.append(ci)
    if not images:
        raise ValueError(f"{root}: no .ppm/.pgm files found")
    shapes = {im.shape for im in images}
    if len(shapes) != 1:
        raise ValueError(f"{root}: images disagree in shape: {sorted(shapes)}")
    return Dataset(np.stack(images), np.asarray(labels, dtype=np.int64),
                   f"imagedir:{root.name}", seed=0, num_classes=len(class_dirs))
