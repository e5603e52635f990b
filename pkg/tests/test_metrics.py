import numpy as np
import pytest

from mlfm.data import Dataset
from mlfm.graph import GraphSpec, MlfmAttachment, attach_mlfm, build_backbone
from mlfm.metrics import (confusion_matrix, evaluate_cls, evaluate_seg,
                          seg_scores, ssim, ssim_depth_profile, ssim_reference,
                          topk_hits)


def brute_topk(logits, labels, k):
    hits = []
    for row, lab in zip(logits, labels):
        ranked = sorted(range(len(row)), key=lambda c: (-row[c], c))
        hits.append(lab in ranked[:k])
    return float(np.mean(hits))


def brute_seg(pred, gt, num_classes):
    tp = np.zeros(num_classes)
    fp = np.zeros(num_classes)
    fn = np.zeros(num_classes)
    correct = total = 0
    for p, g in zip(pred.reshape(-1), gt.reshape(-1)):
        total += 1
        if p == g:
            correct += 1
            tp[g] += 1
        else:
            fp[p] += 1
            fn[g] += 1
    present = [c for c in range(num_classes) if (gt == c).any()]
    iou = [tp[c] / (tp[c] + fp[c] + fn[c]) if tp[c] + fp[c] + fn[c] else 0.0
           for c in present]
    prec = [tp[c] / (tp[c] + fp[c]) if tp[c] + fp[c] else 0.0 for c in present]
    rec = [tp[c] / (tp[c] + fn[c]) if tp[c] + fn[c] else 0.0 for c in present]
    return {"oa": correct / total, "miou": float(np.mean(iou)),
            "precision": float(np.mean(prec)), "recall": float(np.mean(rec))}


class TestTopk:
    def test_tie_breaks_to_lower_class(self):
        logits = np.array([[1.0, 1.0, 1.0]])
        assert topk_hits(logits, [0], 1)[0]
        assert not topk_hits(logits, [1], 1)[0]
        assert topk_hits(logits, [1], 2)[0]

    def test_matches_brute_force_on_random_instances(self, rng):
        for _ in range(50):
            n = int(rng.integers(1, 20))
            k = int(rng.integers(2, 8))
            logits = rng.standard_normal((n, k)).round(1)   # provoke ties
            labels = rng.integers(0, k, n)
            for kk in (1, min(5, k)):
                assert topk_hits(logits, labels, kk).mean() == \
                    pytest.approx(brute_topk(logits, labels, kk))

    def test_uniform_random_top5_binomial_bound(self, rng):
        n, k = 10_000, 10
        logits = rng.standard_normal((n, k))
        labels = rng.integers(0, k, n)
        acc = topk_hits(logits, labels, 5).mean()
        sigma = np.sqrt(0.5 * 0.5 / n)
        assert abs(acc - 0.5) < 3 * sigma + 1e-9


class TestSegScores:
    def test_hand_confusion_case(self):
        pred = np.array([[0, 1], [1, 1]])
        gt = np.array([[0, 1], [0, 1]])
        scores = seg_scores(confusion_matrix(pred, gt, 2))
        assert scores["oa"] == pytest.approx(0.75)
        assert scores["miou"] == pytest.approx(7 / 12)

    def test_perfect_predictor(self):
        gt = np.array([[0, 1, 2], [2, 1, 0]])
        scores = seg_scores(confusion_matrix(gt, gt, 3))
        assert scores == {"oa": 1.0, "miou": 1.0, "precision": 1.0, "recall": 1.0}

    def test_absent_class_excluded(self):
        pred = np.zeros((2, 2), dtype=int)
        gt = np.zeros((2, 2), dtype=int)       # class 1 absent everywhere
        scores = seg_scores(confusion_matrix(pred, gt, 2))
        assert scores["miou"] == 1.0

    def test_matches_brute_force_on_random_instances(self, rng):
        for _ in range(50):
            k = int(rng.integers(2, 5))
            h = int(rng.integers(2, 8))
            pred = rng.integers(0, k, (3, h, h))
            gt = rng.integers(0, k, (3, h, h))
            got = seg_scores(confusion_matrix(pred, gt, k))
            want = brute_seg(pred, gt, k)
            for key in want:
                assert got[key] == pytest.approx(want[key]), key


class TestEvaluate:
    def test_evaluate_cls_and_seg_run(self, rng):
        g = build_backbone(GraphSpec("micro_resnet", (3, 32, 32), 2), seed=0)
        ds = Dataset(rng.random((6, 3, 32, 32)).astype(np.float32),
                     rng.integers(0, 2, 6), "toy", 0, 2)
        out = evaluate_cls(g, ds)
        assert set(out) == {"top1", "top5"} and out["top5"] == 1.0
        gs = build_backbone(GraphSpec("micro_fcn", (3, 32, 32), 3), seed=0)
        seg = Dataset(rng.random((4, 3, 32, 32)).astype(np.float32),
                      rng.integers(0, 3, (4, 32, 32)), "toy", 0, 3)
        outs = evaluate_seg(gs, seg)
        assert all(0.0 <= outs[k] <= 1.0 for k in ("oa", "miou", "precision", "recall"))

    def test_empty_dataset(self):
        g = build_backbone(GraphSpec("micro_resnet", (3, 32, 32), 2), seed=0)
        empty = Dataset(np.zeros((0, 3, 32, 32), np.float32),
                        np.zeros(0, np.int64), "toy", 0, 2)
        with pytest.raises(ValueError):
            evaluate_cls(g, empty)


class TestSsim:
    def test_self_similarity_exactly_one(self, rng):
        x = rng.random((16, 16))
        assert ssim(x, x) == 1.0

    def test_constant_closed_form(self):
        a, b = 0.3, 0.7
        c1 = (0.01 * 1.0) ** 2
        expect = (2 * a * b + c1) / (a * a + b * b + c1)
        got = ssim(np.full((12, 12), a), np.full((12, 12), b))
        assert got == pytest.approx(expect, abs=1e-9)

    def test_matches_reference_oracle(self, rng):
        a, b = rng.random((16, 16)), rng.random((16, 16))
        assert ssim(a, b) == pytest.approx(ssim_reference(a, b), abs=1e-6)

    def test_symmetry(self, rng):
        a, b = rng.random((14, 18)), rng.random((14, 18))
        assert abs(ssim(a, b) - ssim(b, a)) < 1e-9

    def test_too_small_rejected(self):
        with pytest.raises(ValueError):
            ssim(np.zeros((8, 8)), np.zeros((8, 8)))

    def test_shape_mismatch(self):
        with pytest.raises(ValueError):
            ssim(np.zeros((16, 16)), np.zeros((16, 12)))

    def test_range(self, rng):
        a = rng.random((16, 16))
        v = ssim(a, 1.0 - a)
        assert -1.0 <= v <= 1.0


class TestDepthProfile:
    def test_structure_and_range(self, rng):
        g = build_backbone(GraphSpec("micro_resnet", (3, 32, 32), 2), seed=2)
        images = rng.random((4, 3, 32, 32)).astype(np.float32)
        prof = ssim_depth_profile(g, images, basis="haar")
        assert prof["nodes"] == [1, 2, 3, 4, 5]
        assert len(prof["feature_ssim"]) == 5
        assert all(np.isfinite(v) and -1.0 <= v <= 1.0
                   for v in prof["feature_ssim"])
        assert "memory_ssim" not in prof

    def test_wrapped_graph_reports_memory_similarity(self, rng):
        base = build_backbone(GraphSpec("micro_resnet", (3, 32, 32), 2), seed=2)
        g = attach_mlfm(base, MlfmAttachment(1, 5))
        images = rng.random((2, 3, 32, 32)).astype(np.float32)
        prof = ssim_depth_profile(g, images, basis="haar")
        assert set(prof["memory_ssim"]) == {1, 2, 3, 4, 5}
