"""Experiment configuration: a JSON document with a strict schema.

Validation rejects unknown keys and reports the full key path of the first
offending entry.  Environment variables are never consulted; a config file
plus the CLI overrides fully determine a run.

Defaults: haar basis, wavelet down-sampler, supplement gate on, placement
L1-L5 (micro_fcn placements clamp to L1-L4), micro_resnet on the low-
frequency synthetic set.
"""

import json
from dataclasses import dataclass, field
from pathlib import Path

from .graph import ARCHITECTURES, SEG_MODES, GraphSpec, MlfmAttachment
from .lfmu import DOWNSAMPLERS, LfmuConfig
from .train import TrainConfig
from .wavelet import WAVELET_IDS, normalize_basis


class ConfigError(ValueError):
    def __init__(self, path, message):
        self.path = path
        super().__init__(f"config key {path!r}: {message}")


_SCHEMA = {
    "architecture": (str, "micro_resnet"),
    "num_classes": (int, None),            # default depends on the generator
    "input_size": (int, 64),
    "attachment": {
        "enabled": (bool, True),
        "start": (int, 1),
        "end": (int, 5),
        "seg_mode": (str, None),           # default depends on architecture
    },
    "lfmu": {
        "mem_channels": (int, 32),
        "basis": (str, "haar"),
        "downsampler": (str, "wavelet"),
        "supplement": (bool, True),
    },
    "dataset": {
        "generator": (str, "lowfreq"),
        "n": (int, 2000),
        "test_n": (int, 500),
        "size": (int, 64),
        "seed": (int, 0),
        "image_dir": (str, ""),
        "cache": (bool, True),
    },
    "train": {
        "epochs": (int, 10),
        "batch_size": (int, 32),
        "lr": (float, 0.01),
        "momentum": (float, 0.9),
        "weight_decay": (float, 1e-4),
        "seed": (int, 0),
        "eval_every": (int, 1),
        "dtype": (str, "float32"),
    },
    "output": (str, "runs/default"),
}


def _apply(schema, raw, path):
    out = {}
    if not isinstance(raw, dict):
        raise ConfigError(path or "<root>", f"expected an object, got {type(raw).__name__}")
    for key in raw:
        if key not in schema:
            raise ConfigError(f"{path}{key}", "unknown key")
    for key, rule in schema.items():
        sub = f"{path}{key}"
        if isinstance(rule, dict):
            out[key] = _apply(rule, raw.get(key, {}), sub + ".")
            continue
        typ, default = rule
        if key not in raw:
            out[key] = default
            continue
        val = raw[key]
        if typ is float and isinstance(val, int) and not isinstance(val, bool):
            val = float(val)
        if not isinstance(val, typ) or isinstance(val, bool) and typ is not bool:
            raise ConfigError(sub, f"expected {typ.__name__}, got {type(val).__name__}")
        out[key] = val
    return out


@dataclass
class ExperimentConfig:
    raw: dict = field(repr=False, default_factory=dict)
    architecture: str = "micro_resnet"
    num_classes: int = 2
    input_size: int = 64
    attachment_enabled: bool = True
    attachment: MlfmAttachment = None
    lfmu: LfmuConfig = None
    dataset: dict = None
    train: TrainConfig = None
    output: str = "runs/default"

    def graph_spec(self):
        return GraphSpec(self.architecture,
                         (3, self.input_size, self.input_size), self.num_classes)


def _validate_semantics(cfg):
    tree = cfg.raw
    if tree["architecture"] not in ARCHITECTURES:
        raise ConfigError("architecture",
                          f"must be one of {ARCHITECTURES}, got {tree['architecture']!r}")
    try:
        normalize_basis(tree["lfmu"]["basis"])
    except ValueError:
        raise ConfigError("lfmu.basis",
                          f"unknown basis {tree['lfmu']['basis']!r}; "
                          f"known: {', '.join(WAVELET_IDS)}") from None
    if tree["lfmu"]["downsampler"] not in DOWNSAMPLERS:
        raise ConfigError("lfmu.downsampler", f"must be one of {DOWNSAMPLERS}")
    att = tree["attachment"]
    if att["seg_mode"] is not None and att["seg_mode"] not in SEG_MODES:
        raise ConfigError("attachment.seg_mode", f"must be one of {SEG_MODES}")
    if not 1 <= att["start"] <= att["end"]:
        raise ConfigError("attachment.start",
                          f"need 1 <= start <= end, got {att['start']}..{att['end']}")
    ds = tree["dataset"]
    if ds["generator"] not in ("lowfreq", "shapes", "image_dir"):
        raise ConfigError("dataset.generator", "must be lowfreq|shapes|image_dir")
    if ds["generator"] == "image_dir" and not ds["image_dir"]:
        raise ConfigError("dataset.image_dir", "required for the image_dir generator")
    for key in ("n", "test_n", "size"):
        if ds[key] < 1:
            raise ConfigError(f"dataset.{key}", "must be positive")
    tr = tree["train"]
    try:
        train_cfg = TrainConfig(**tr)
    except ValueError as e:
        raise ConfigError("train", str(e)) from None
    return train_cfg


def resolve(tree):
    """Schema-checks a raw dict and builds the typed config."""
    raw = _apply(_SCHEMA, tree, "")
    arch = raw["architecture"]
    gen = raw["dataset"]["generator"]
    if raw["num_classes"] is None:
        raw["num_classes"] = {"lowfreq": 2, "shapes": 3}.get(gen, 2)
    if raw["attachment"]["seg_mode"] is None:
        raw["attachment"]["seg_mode"] = "encoder" if arch == "micro_fcn" else "none"
    cfg = ExperimentConfig(raw=raw)
    train_cfg = _validate_semantics(cfg)
    cfg.architecture = arch
    cfg.num_classes = raw["num_classes"]
    cfg.input_size = raw["input_size"]
    lf = raw["lfmu"]
    cfg.lfmu = LfmuConfig(mem_channels=lf["mem_channels"], basis=lf["basis"],
                          downsampler=lf["downsampler"],
                          supplement_enabled=lf["supplement"])
    att = raw["attachment"]
    cfg.attachment_enabled = att["enabled"]
    end = att["end"]
    if arch == "micro_fcn" and end == _SCHEMA["attachment"]["end"][1]:
        end = 4                       # default placement clamps to the encoder
    cfg.attachment = MlfmAttachment(att["start"], end, cfg.lfmu,
                                    seg_mode=att["seg_mode"])
    cfg.dataset = raw["dataset"]
    cfg.train = train_cfg
    cfg.output = raw["output"]
    # spec-level constraints surface early, as config errors
    try:
        cfg.graph_spec()
    except ValueError as e:
        raise ConfigError("input_size", str(e)) from None
    return cfg


def load_file(path):
    p = Path(path)
    if not p.exists():
        raise ConfigError("<file>", f"config file not found: {path}")
    try:
        tree = json.loads(p.read_text())
    except json.JSONDecodeError as e:
        raise ConfigError("<file>", f"not valid JSON: {e}") from None
    return resolve(tree)


def resolved_tree(cfg):
    return cfg.raw
