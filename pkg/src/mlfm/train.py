"""Minibatch SGD training with deterministic persistence.

A run writes three artifacts into its output directory:

* checkpoint.mlfm   -- final parameters (bit-exact container)
* report.jsonl      -- one record per epoch plus a final record; fully
                       deterministic for a given config and seed
* report.meta.json  -- wall time and backend info (intentionally outside
                       the deterministic surface)
"""

import json
import time
from dataclasses import asdict, dataclass
from pathlib import Path

import numpy as np

from . import checkpoint
from ._rng import stream
from .metrics import evaluate_cls, evaluate_seg
from .tensor import Tape, Tensor, backward, sgd_step, softmax_cross_entropy


class TrainingDiverged(RuntimeError):
    pass


@dataclass(frozen=True)
class TrainConfig:
    epochs: int = 10
    batch_size: int = 32
    lr: float = 0.01
    momentum: float = 0.9
    weight_decay: float = 1e-4
    seed: int = 0
    eval_every: int = 1
    dtype: str = "float32"

    def __post_init__(self):
        if self.epochs < 0 or self.batch_size < 1 or self.lr < 0:
            raise ValueError("epochs must be >= 0, batch_size >= 1, lr >= 0")
        if not 0 <= self.momentum < 1 or self.weight_decay < 0 or self.eval_every < 1:
            raise ValueError("momentum in [0,1), weight_decay >= 0, eval_every >= 1")
        if self.dtype not in ("float32", "float64"):
            raise ValueError(f"dtype must be float32|float64, got {self.dtype}")


@dataclass
class MetricsReport:
    config: dict
    records: list

    def final(self):
        return self.records[-1] if self.records else None

    def to_jsonl(self):
        return "".join(json.dumps(r, sort_keys=True) + "\n" for r in self.records)


def _evaluate(graph, dataset):
    if dataset.is_segmentation:
        return evaluate_seg(graph, dataset)
    return evaluate_cls(graph, dataset)


def train(graph, dataset, cfg, eval_dataset=None, out_dir=None):
    """Trains a built graph; returns (trained graph, MetricsReport)."""
    n = len(dataset)
    if n == 0:
        raise ValueError("empty dataset")
    t0 = time.monotonic()
    from .graph import Graph
    params = {k: Tensor(v.data.astype(cfg.dtype, copy=False))
              for k, v in graph.params.items()}
    graph = Graph(graph.spec, params, graph.seed, cfg.dtype, graph.attachment)
    velocity = None
    records = []
    step_count = 0
    for epoch in range(cfg.epochs):
        order = stream(cfg.seed, f"train.order.epoch{epoch}").permutation(n)
        losses = []
        for lo in range(0, n, cfg.batch_size):
            idx = order[lo:lo + cfg.batch_size]
            x = Tensor(dataset.images[idx].astype(cfg.dtype, copy=False))
            y = dataset.labels[idx]
            with Tape() as tape:
                for p in graph.params.values():
                    tape.watch(p)
                logits = graph.forward(x)
                loss = softmax_cross_entropy(logits, y)
            val = loss.item()
            if not np.isfinite(val):
                raise TrainingDiverged(
                    f"non-finite loss {val} at epoch {epoch} step {step_count}")
            if cfg.lr > 0:        # lr=0 is the documented no-update fixed point
                grads = backward(loss, tape)
                named = {name: grads[p.grad_id] for name, p in graph.params.items()
                         if p.grad_id in grads}
                new_params, velocity = sgd_step(graph.params, named, cfg.lr,
                                                cfg.momentum, cfg.weight_decay,
                                                velocity)
                graph = graph.replace_params(new_params)
            losses.append(val)
            step_count += 1
        rec = {"epoch": epoch, "mean_loss": float(np.mean(losses))}
        if (epoch + 1) % cfg.eval_every == 0 or epoch == cfg.epochs - 1:
            rec["train_metrics"] = _evaluate(graph, dataset)
            if eval_dataset is not None:
                rec["eval_metrics"] = _evaluate(graph, eval_dataset)
        records.append(rec)

    final = {"final": True, "steps": step_count,
             "params": graph.count_params(),
             "macs": graph.count_macs(),
             "train_metrics": _evaluate(graph, dataset)}
    if eval_dataset is not None:
        final["eval_metrics"] = _evaluate(graph, eval_dataset)
    records.append(final)
    report = MetricsReport(config=asdict(cfg), records=records)

    if out_dir is not None:
        out = Path(out_dir)
        out.mkdir(parents=True, exist_ok=True)
        checkpoint.save(out / "checkpoint.mlfm", graph.params)
        (out / "report.jsonl").write_text(report.to_jsonl())
        from .kernels import BACKEND
        meta = {"wall_time_s": time.monotonic() - t0, "kernel_backend": BACKEND}
        (out / "report.meta.json").write_text(json.dumps(meta, sort_keys=True) + "\n")
    return graph, report
