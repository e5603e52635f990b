import json

import numpy as np
import pytest

from mlfm.cli import main


def write_config(tmp_path, **overrides):
    tree = {
        "architecture": "micro_resnet",
        "input_size": 32,
        "dataset": {"generator": "lowfreq", "n": 24, "test_n": 8, "size": 32,
                    "seed": 0},
        "train": {"epochs": 1, "batch_size": 8, "lr": 0.01, "seed": 0,
                  "eval_every": 1},
        "output": str(tmp_path / "run"),
    }
    for key, value in overrides.items():
        if isinstance(value, dict):
            tree.setdefault(key, {}).update(value)
        else:
            tree[key] = value
    path = tmp_path / "config.json"
    path.write_text(json.dumps(tree))
    return path


class TestCount:
    def test_resnet18_params(self, capsys):
        assert main(["count", "--arch", "resnet18"]) == 0
        out = capsys.readouterr().out
        assert "params=11689512" in out
        assert "macs=" in out

    def test_micro_resnet(self, capsys):
        assert main(["count", "--arch", "micro_resnet"]) == 0
        assert "params=" in capsys.readouterr().out


class TestWaveletSelftest:
    def test_18_pass_lines_exit_zero(self, capsys):
        assert main(["wavelet", "selftest"]) == 0
        out = capsys.readouterr().out
        machine = [l for l in out.splitlines() if l.startswith("SELFTEST ")]
        assert len(machine) == 18
        assert all("status=PASS" in l for l in machine)


class TestConfigHandling:
    def test_dry_run_prints_resolved_config(self, tmp_path, capsys):
        cfg = write_config(tmp_path)
        assert main(["train", "--config", str(cfg), "--dry-run"]) == 0
        tree = json.loads(capsys.readouterr().out)
        assert tree["lfmu"]["basis"] == "haar"
        assert tree["lfmu"]["downsampler"] == "wavelet"
        assert tree["lfmu"]["supplement"] is True
        assert (tree["attachment"]["start"], tree["attachment"]["end"]) == (1, 5)

    def test_unknown_key_exit1_with_path(self, tmp_path, capsys):
        cfg = write_config(tmp_path, lfmu={"wavelet_kind": "haar"})
        assert main(["train", "--config", str(cfg), "--dry-run"]) == 1
        assert "lfmu.wavelet_kind" in capsys.readouterr().err

    def test_bad_value_exit1(self, tmp_path, capsys):
        cfg = write_config(tmp_path, lfmu={"basis": "db3"})
        assert main(["train", "--config", str(cfg), "--dry-run"]) == 1
        assert "lfmu.basis" in capsys.readouterr().err

    def test_missing_file_exit1(self, tmp_path):
        assert main(["train", "--config", str(tmp_path / "none.json"),
                     "--dry-run"]) == 1

    def test_seed_and_dtype_overrides(self, tmp_path, capsys):
        cfg = write_config(tmp_path)
        assert main(["train", "--config", str(cfg), "--seed", "9",
                     "--dtype", "f64", "--dry-run"]) == 0
        tree = json.loads(capsys.readouterr().out)
        assert tree["train"]["seed"] == 9
        assert tree["train"]["dtype"] == "float64"


class TestTrainEval:
    def test_train_then_eval_idempotent(self, tmp_path, capsys):
        cfg = write_config(tmp_path)
        assert main(["train", "--config", str(cfg)]) == 0
        run = tmp_path / "run"
        first = ((run / "checkpoint.mlfm").read_bytes(),
                 (run / "report.jsonl").read_bytes())
        assert main(["train", "--config", str(cfg)]) == 0
        second = ((run / "checkpoint.mlfm").read_bytes(),
                  (run / "report.jsonl").read_bytes())
        assert first == second
        assert main(["eval", "--config", str(cfg)]) == 0
        out = capsys.readouterr().out
        assert "top1=" in out
        assert (run / "eval.jsonl").exists()


class TestAblate:
    def test_downsampler_zero_epochs_transparency(self, tmp_path, capsys):
        cfg = write_config(tmp_path, train={"epochs": 0})
        assert main(["ablate-downsampler", "--config", str(cfg)]) == 0
        rows = [json.loads(l) for l in
                (tmp_path / "run" / "ablate_downsampler.jsonl").read_text().splitlines()]
        assert [r["downsampler"] for r in rows] == ["baseline", "wavelet", "max", "avg"]
        values = {r["metric"] for r in rows}
        assert len(values) == 1          # zero-init transparency composition


class TestSsimProfile:
    def test_writes_profile(self, tmp_path, capsys):
        cfg = write_config(tmp_path, attachment={"enabled": False})
        assert main(["ssim-profile", "--config", str(cfg)]) == 0
        prof = json.loads((tmp_path / "run" / "ssim_profile.jsonl").read_text())
        assert prof["nodes"] == [1, 2, 3, 4, 5]
