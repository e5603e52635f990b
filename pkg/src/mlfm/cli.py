"""Command-line entry point.

Subcommands: train, eval, ablate-placement, ablate-basis,
ablate-downsampler, wavelet selftest, ssim-profile, count.

Exit codes: 0 success, 1 configuration/validation error, 2 runtime
failure.  Stdout carries human-readable progress; machine-readable
reports are written into the config's output directory.
"""

import argparse
import json
import sys
from dataclasses import replace
from pathlib import Path

import numpy as np

from . import ablate, checkpoint, config as config_mod
from .config import ConfigError
from .data import load_image_dir, load_or_generate
from .graph import GraphSpec, attach_mlfm, build_backbone
from .metrics import evaluate_cls, evaluate_seg, ssim_depth_profile
from .train import TrainingDiverged, train
from .wavelet import format_selftest, selftest


def _parser():
    p = argparse.ArgumentParser(prog="mlfm")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--config", required=True, help="JSON experiment config")
        sp.add_argument("--seed", type=int, default=None, help="override train.seed")
        sp.add_argument("--output", default=None, help="override output directory")
        sp.add_argument("--dtype", choices=("f32", "f64"), default=None,
                        help="override train.dtype")
        sp.add_argument("--dry-run", action="store_true",
                        help="validate and print the resolved config, no compute")

    for name in ("train", "eval", "ablate-placement", "ablate-basis",
                 "ablate-downsampler", "ssim-profile"):
        common(sub.add_parser(name))

    wav = sub.add_parser("wavelet")
    wav_sub = wav.add_subparsers(dest="wavelet_command", required=True)
    wav_sub.add_parser("selftest").add_argument("--seed", type=int, default=0)

    cnt = sub.add_parser("count")
    cnt.add_argument("--arch", required=True,
                     choices=("resnet18", "micro_resnet", "micro_fcn"))
    cnt.add_argument("--classes", type=int, default=None)
    cnt.add_argument("--size", type=int, default=None)
    return p


def _load_config(args):
    cfg = config_mod.load_file(args.config)
    if args.seed is not None:
        cfg.train = replace(cfg.train, seed=args.seed)
        cfg.raw["train"]["seed"] = args.seed
    if args.output is not None:
        cfg.output = args.output
        cfg.raw["output"] = args.output
    if args.dtype is not None:
        dt = {"f32": "float32", "f64": "float64"}[args.dtype]
        cfg.train = replace(cfg.train, dtype=dt)
        cfg.raw["train"]["dtype"] = dt
    return cfg


def _datasets(cfg):
    ds = cfg.dataset
    if ds["generator"] == "image_dir":
        full = load_image_dir(ds["image_dir"])
        return full, full
    cache = str(Path(cfg.output) / "datasets") if ds["cache"] else None
    train_ds = load_or_generate(ds["generator"], ds["n"], ds["size"], ds["seed"],
                                cache_dir=cache)
    # held-out split: same generator, disjoint stream via seed+1
    eval_ds = load_or_generate(ds["generator"], ds["test_n"], ds["size"],
                               ds["seed"] + 1, cache_dir=cache)
    return train_ds, eval_ds


def _build(cfg):
    g = build_backbone(cfg.graph_spec(), seed=cfg.train.seed, dtype=cfg.train.dtype)
    if cfg.attachment_enabled:
        g = attach_mlfm(g, cfg.attachment)
    return g


def _dry_run(cfg):
    print(json.dumps(config_mod.resolved_tree(cfg), indent=2, sort_keys=True))
    return 0


def _cmd_train(args):
    cfg = _load_config(args)
    if args.dry_run:
        return _dry_run(cfg)
    train_ds, eval_ds = _datasets(cfg)
    graph = _build(cfg)
    print(f"training {cfg.architecture} on {train_ds.generator} "
          f"(n={len(train_ds)}), params={graph.count_params()}")
    graph, report = train(graph, train_ds, cfg.train, eval_dataset=eval_ds,
                          out_dir=cfg.output)
    final = report.final()
    print(f"done: steps={final['steps']} train={final['train_metrics']} "
          f"eval={final.get('eval_metrics')}")
    print(f"artifacts in {cfg.output}")
    return 0


def _cmd_eval(args):
    cfg = _load_config(args)
    if args.dry_run:
        return _dry_run(cfg)
    _, eval_ds = _datasets(cfg)
    graph = _build(cfg)
    ckpt = Path(cfg.output) / "checkpoint.mlfm"
    if ckpt.exists():
        params = checkpoint.load(ckpt)
        graph = graph.replace_params(
            {k: v for k, v in params.items()})
        print(f"loaded {ckpt}")
    metrics = (evaluate_seg if eval_ds.is_segmentation else evaluate_cls)(graph, eval_ds)
    print(" ".join(f"{k}={v:.4f}" for k, v in metrics.items()))
    out = Path(cfg.output)
    out.mkdir(parents=True, exist_ok=True)
    (out / "eval.jsonl").write_text(json.dumps(metrics, sort_keys=True) + "\n")
    return 0


def _sweep_command(args, kind):
    cfg = _load_config(args)
    if args.dry_run:
        return _dry_run(cfg)
    train_ds, eval_ds = _datasets(cfg)
    spec = cfg.graph_spec()
    seg = "encoder" if cfg.architecture == "micro_fcn" else "none"
    rng = (cfg.attachment.start, cfg.attachment.end)

    def progress(label, supplement, value):
        tag = "" if supplement is None else f" supplement={supplement}"
        print(f"  {label}{tag}: {value:.4f}")

    if kind == "placement":
        rows = ablate.ablate_placements(spec, train_ds, cfg.train, eval_ds,
                                        lfmu=cfg.lfmu, seg_mode=seg,
                                        progress=progress)
        text = ablate.format_placement_table(rows)
        fname = "ablate_placement.jsonl"
    elif kind == "basis":
        rows = ablate.ablate_basis(spec, train_ds, cfg.train, eval_ds,
                                   lfmu=cfg.lfmu, seg_mode=seg,
                                   attachment_range=rng, progress=progress)
        text = ablate.format_sweep_table(rows, "basis")
        fname = "ablate_basis.jsonl"
    else:
        rows = ablate.ablate_downsampler(spec, train_ds, cfg.train, eval_ds,
                                         lfmu=cfg.lfmu, seg_mode=seg,
                                         attachment_range=rng, progress=progress)
        text = ablate.format_sweep_table(rows, "downsampler")
        fname = "ablate_downsampler.jsonl"
    print(text)
    out = Path(cfg.output)
    out.mkdir(parents=True, exist_ok=True)
    (out / fname).write_text("".join(json.dumps(r, sort_keys=True) + "\n"
                                     for r in rows))
    return 0


def _cmd_ssim_profile(args):
    cfg = _load_config(args)
    if args.dry_run:
        return _dry_run(cfg)
    _, eval_ds = _datasets(cfg)
    graph = _build(cfg)
    images = eval_ds.images[:min(len(eval_ds), 20)]
    profile = ssim_depth_profile(graph, images, basis=cfg.lfmu.basis)
    for node, value in zip(profile["nodes"], profile["feature_ssim"]):
        print(f"node L{node}: feature-vs-LL ssim {value:+.4f}")
    if "memory_ssim" in profile:
        for node, value in sorted(profile["memory_ssim"].items()):
            print(f"node L{node}: memory-vs-LL ssim {value:+.4f}")
    out = Path(cfg.output)
    out.mkdir(parents=True, exist_ok=True)
    (out / "ssim_profile.jsonl").write_text(json.dumps(profile, sort_keys=True) + "\n")
    return 0


def _cmd_wavelet(args):
    rows = selftest(seed=args.seed)
    print(format_selftest(rows))
    for r in rows:
        energy = "none" if r["energy_error"] is None else f"{r['energy_error']:.3e}"
        print(f"SELFTEST basis={r['basis']} taps={r['taps']} pr={r['pr_error']:.3e} "
              f"dc={r['dc_error']:.3e} energy={energy} status={r['status']}")
    return 0 if all(r["status"] == "PASS" for r in rows) else 2


def _cmd_count(args):
    arch = {"resnet18": "resnet18_structural"}.get(args.arch, args.arch)
    classes = args.classes or (1000 if arch == "resnet18_structural" else 2)
    size = args.size or (224 if arch == "resnet18_structural" else 64)
    spec = GraphSpec(arch, (3, size, size), classes)
    g = build_backbone(spec)
    print(f"params={g.count_params()}")
    print(f"macs={g.count_macs()}")
    return 0


def main(argv=None):
    args = _parser().parse_args(argv)
    try:
        if args.command == "train":
            return _cmd_train(args)
        if args.command == "eval":
            return _cmd_eval(args)
        if args.command == "ablate-placement":
            return _sweep_command(args, "placement")
        if args.command == "ablate-basis":
            return _sweep_command(args, "basis")
        if args.command == "ablate-downsampler":
            return _sweep_command(args, "downsampler")
        if args.command == "ssim-profile":
            return _cmd_ssim_profile(args)
        if args.command == "wavelet":
            return _cmd_wavelet(args)
        if args.command == "count":
            return _cmd_count(args)
        raise AssertionError(f"unhandled command {args.command}")
    except ConfigError as e:
        print(f"config error: {e}", file=sys.stderr)
        return 1
    except (TrainingDiverged, checkpoint.CheckpointError) as e:
        print(f"runtime error: {e}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as e:
        print(f"runtime error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
