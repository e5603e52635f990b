import numpy as np
import pytest

from mlfm.data import (cache_name, gen_synth_lowfreq, gen_synth_shapes,
                       load_image_dir, load_or_generate)


class TestLowfreq:
    def test_deterministic_bytes(self):
        a = gen_synth_lowfreq(24, 32, 7)
        b = gen_synth_lowfreq(24, 32, 7)
        assert a.images.tobytes() == b.images.tobytes()
        assert a.labels.tobytes() == b.labels.tobytes()
        c = gen_synth_lowfreq(24, 32, 8)
        assert a.images.tobytes() != c.images.tobytes()

    @pytest.mark.parametrize("n", [10, 11])
    def test_exact_class_balance(self, n):
        ds = gen_synth_lowfreq(n, 32, 0)
        assert int((ds.labels == 0).sum()) == -(-n // 2)   # ceil
        assert int((ds.labels == 1).sum()) == n // 2

    def test_range_and_shape(self):
        ds = gen_synth_lowfreq(6, 64, 1)
        assert ds.images.shape == (6, 3, 64, 64)
        assert ds.images.dtype == np.float32
        assert ds.images.min() >= 0.0 and ds.images.max() <= 1.0

    def test_invalid_size(self):
        with pytest.raises(ValueError):
            gen_synth_lowfreq(4, 48, 0)
        with pytest.raises(ValueError):
            gen_synth_lowfreq(4, 16, 0)

    def test_low_frequency_linear_separability_oracle(self):
        # the task must be solvable from the LL chain alone: least-squares
        # on wavedec_ll(image, haar, 3) features clears 95% train accuracy
        from mlfm import Tensor, wavedec_ll
        ds = gen_synth_lowfreq(2000, 64, 3)
        feats = wavedec_ll(Tensor(ds.images), "haar", 3).data.reshape(2000, -1)
        feats = np.concatenate([feats, np.ones((2000, 1), dtype=np.float32)], axis=1)
        target = 2.0 * ds.labels - 1.0
        coef, *_ = np.linalg.lstsq(feats.astype(np.float64), target, rcond=None)
        pred = (feats @ coef) > 0
        acc = float((pred == (ds.labels == 1)).mean())
        assert acc > 0.95, acc


class TestShapes:
    def test_deterministic_bytes(self):
        a = gen_synth_shapes(8, 32, 5)
        b = gen_synth_shapes(8, 32, 5)
        assert a.images.tobytes() == b.images.tobytes()
        assert a.labels.tobytes() == b.labels.tobytes()

    def test_labels_and_bands(self):
        ds = gen_synth_shapes(16, 64, 2)
        assert ds.labels.shape == (16, 64, 64)
        assert set(np.unique(ds.labels)) <= {0, 1, 2}
        assert ds.num_classes == 3
        # intensity bands separate classes away from the +-0.02 noise overlap
        rect = ds.images[:, 0][ds.labels == 1]
        disk = ds.images[:, 0][ds.labels == 2]
        bg = ds.images[:, 0][ds.labels == 0]
        assert bg.max() < 0.45 and rect.min() > 0.40 and disk.min() > 0.70

    def test_every_image_has_foreground(self):
        ds = gen_synth_shapes(12, 64, 9)
        assert all((ds.labels[i] > 0).any() for i in range(12))

    def test_mean_foreground_fraction_in_analytic_band(self):
        # area oracle: E[#shapes]=2; P(disk)=1/2 with area pi*E[r^2],
        # P(rect)=1/2 with area 4*E[a]*E[b]; r,a,b ~ U(0.08, 0.2)*size
        e_r2 = (0.08 ** 2 + 0.08 * 0.2 + 0.2 ** 2) / 3
        e_disk = np.pi * e_r2
        e_rect = 4 * 0.14 * 0.14
        analytic = 2 * 0.5 * (e_disk + e_rect)
        ds = gen_synth_shapes(1000, 32, 4)
        measured = float((ds.labels > 0).mean())
        # placement rejection can only drop shapes, discretization adds a bit
        assert 0.5 * analytic < measured < 1.1 * analytic, (measured, analytic)


class TestCache:
    def test_roundtrip_identical(self, tmp_path):
        fresh = load_or_generate("lowfreq", 12, 32, 3, cache_dir=tmp_path)
        assert (tmp_path / cache_name("lowfreq", 3, 12, 32)).exists()
        cached = load_or_generate("lowfreq", 12, 32, 3, cache_dir=tmp_path)
        assert np.array_equal(fresh.images, cached.images)
        assert np.array_equal(fresh.labels, cached.labels)

    def test_unknown_generator(self):
        with pytest.raises(ValueError):
            load_or_generate("mnist", 8, 32, 0)


def _write_ppm(path, arr):
    h, w, _ = arr.shape
    with open(path, "wb") as fh:
        fh.write(f"P6\n{w} {h}\n255\n".encode())
        fh.write(arr.astype(np.uint8).tobytes())


def _write_pgm(path, arr):
    h, w = arr.shape
    with open(path, "wb") as fh:
        fh.write(f"P5\n# comment line\n{w} {h}\n255\n".encode())
        fh.write(arr.astype(np.uint8).tobytes())


class TestImageDir:
    def test_loads_classes_sorted(self, tmp_path):
        rng = np.random.default_rng(0)
        (tmp_path / "cat").mkdir()
        (tmp_path / "dog").mkdir()
        _write_ppm(tmp_path / "cat" / "a.ppm", rng.integers(0, 256, (8, 8, 3)))
        _write_pgm(tmp_path / "cat" / "b.pgm", rng.integers(0, 256, (8, 8)))
        _write_ppm(tmp_path / "dog" / "c.ppm", rng.integers(0, 256, (8, 8, 3)))
        ds = load_image_dir(tmp_path)
        assert ds.images.shape == (3, 3, 8, 8)
        assert ds.labels.tolist() == [0, 0, 1]
        assert 0.0 <= ds.images.min() and ds.images.max() <= 1.0

    def test_pgm_replicates_channels(self, tmp_path):
        (tmp_path / "x").mkdir()
        _write_pgm(tmp_path / "x" / "a.pgm",
                   np.arange(64).reshape(8, 8) * 3)
        ds = load_image_dir(tmp_path)
        assert np.array_equal(ds.images[0, 0], ds.images[0, 1])

    def test_rejects_mixed_shapes(self, tmp_path):
        rng = np.random.default_rng(0)
        (tmp_path / "x").mkdir()
        _write_ppm(tmp_path / "x" / "a.ppm", rng.integers(0, 256, (8, 8, 3)))
        _write_ppm(tmp_path / "x" / "b.ppm", rng.integers(0, 256, (4, 4, 3)))
        with pytest.raises(ValueError, match="disagree"):
            load_image_dir(tmp_path)

    def test_rejects_wrong_magic(self, tmp_path):
        (tmp_path / "x").mkdir()
        (tmp_path / "x" / "a.ppm").write_bytes(b"P3\n2 2\n255\n" + b"0 " * 12)
        with pytest.raises(ValueError, match="magic"):
            load_image_dir(tmp_path)

    def test_rejects_truncated(self, tmp_path):
        (tmp_path / "x").mkdir()
        (tmp_path / "x" / "a.ppm").write_bytes(b"P6\n4 4\n255\n\x00\x01")
        with pytest.raises(ValueError, match="pixel bytes"):
            load_image_dir(tmp_path)

    def test_empty_dir(self, tmp_path):
        with pytest.raises(ValueError):
            load_image_dir(tmp_path)
