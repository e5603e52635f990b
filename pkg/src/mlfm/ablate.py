"""Ablation drivers: placement grid, basis sweep, down-sampler sweep.

Every sweep trains (or, with 0 epochs, just evaluates) each configuration
under an identical seed and budget and emits one structured row per cell.
The placement grid mirrors the published table shape: a baseline row plus
the 15 (start, end) pairs, where single-node placements run only with the
supplement gate enabled (the no-supplement column stays a dash).
"""

from dataclasses import replace

import numpy as np

from .graph import PLACEMENTS, MlfmAttachment, attach_mlfm, build_backbone
from .lfmu import DOWNSAMPLERS, LfmuConfig
from .train import train
from .wavelet import WAVELET_IDS


def _metric_of(report, eval_available):
    rec = report.final()
    metrics = rec["eval_metrics"] if eval_available else rec["train_metrics"]
    return metrics["miou"] if "miou" in metrics else metrics["top1"]


def _run_cell(spec, attachment, dataset, cfg, eval_dataset, seed):
    g = build_backbone(spec, seed=seed, dtype=cfg.dtype)
    if attachment is not None:
        g = attach_mlfm(g, attachment)
    _, report = train(g, dataset, cfg, eval_dataset=eval_dataset)
    return _metric_of(report, eval_dataset is not None)


def ablate_placements(spec, dataset, cfg, eval_dataset=None, lfmu=LfmuConfig(),
                      seg_mode="none", progress=None):
    """Baseline + 15 placements x supplement {on, off}; dashes are None."""
    rows = [{"placement": "baseline",
             "with_supplement": _run_cell(spec, None, dataset, cfg, eval_dataset,
                                          cfg.seed),
             "no_supplement": None}]
    for start, end in PLACEMENTS:
        row = {"placement": f"L{start}-L{end}"}
        for supplement in (True, False):
            key = "with_supplement" if supplement else "no_supplement"
            if not supplement and start == end:
                row[key] = None        # single-node rows run supplement-only
                continue
            att = MlfmAttachment(start, end,
                                 replace(lfmu, supplement_enabled=supplement),
                                 seg_mode=seg_mode)
            row[key] = _run_cell(spec, att, dataset, cfg, eval_dataset, cfg.seed)
            if progress is not None:
                progress(row["placement"], supplement, row[key])
        rows.append(row)
    return rows


def ablate_basis(spec, dataset, cfg, eval_dataset=None, lfmu=LfmuConfig(),
                 seg_mode="none", attachment_range=(1, 5), progress=None):
    rows = []
    for basis in WAVELET_IDS:
        att = MlfmAttachment(attachment_range[0], attachment_range[1],
                             replace(lfmu, basis=basis), seg_mode=seg_mode)
        value = _run_cell(spec, att, dataset, cfg, eval_dataset, cfg.seed)
        rows.append({"basis": basis, "metric": value})
        if progress is not None:
            progress(basis, None, value)
    return rows


def ablate_downsampler(spec, dataset, cfg, eval_dataset=None, lfmu=LfmuConfig(),
                       seg_mode="none", attachment_range=(1, 5), progress=None):
    rows = [{"downsampler": "baseline",
             "metric": _run_cell(spec, None, dataset, cfg, eval_dataset, cfg.seed)}]
    for mode in DOWNSAMPLERS:
        att = MlfmAttachment(attachment_range[0], attachment_range[1],
                             replace(lfmu, downsampler=mode), seg_mode=seg_mode)
        value = _run_cell(spec, att, dataset, cfg, eval_dataset, cfg.seed)
        rows.append({"downsampler": mode, "metric": value})
        if progress is not None:
            progress(mode, None, value)
    return rows


def format_placement_table(rows):
    lines = [f"{'placement':12s} {'with supplement':>16s} {'no supplement':>14s}"]
    for r in rows:
        ws = "-" if r["with_supplement"] is None else f"{r['with_supplement']:.4f}"
        ns = "-" if r["no_supplement"] is None else f"{r['no_supplement']:.4f}"
        lines.append(f"{r['placement']:12s} {ws:>16s} {ns:>14s}")
    return "\n".join(lines)


def format_sweep_table(rows, key):
    lines = [f"{key:14s} {'metric':>8s}"]
    for r in rows:
        lines.append(f"{r[key]:14s} {r['metric']:8.4f}")
    return "\n".join(lines)
